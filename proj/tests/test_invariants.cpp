#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sgc/families.hpp"
#include "sgc/flow.hpp"
#include "sgc/generators.hpp"
#include "sgc/invariants.hpp"

using namespace sgc;

namespace {

void check_witnesses(const Graph& g) {
  auto a = independence_number(g);
  CHECK(a.exhaustive);
  CHECK(static_cast<int>(a.witness.size()) == a.alpha);
  CHECK(is_independent_set(g, a.witness));
  auto k = vertex_connectivity(g);
  if (k.separator) {
    CHECK(static_cast<int>(k.separator->size()) == k.kappa);
    if (is_connected(g)) CHECK(is_separator(g, *k.separator));
  } else {
    CHECK(k.complete);
  }
}

}  // namespace

TEST_CASE("independence number examples") {
  CHECK(independence_number(complete_bipartite(3, 6).graph).alpha == 6);
  CHECK(independence_number(complete_graph(4)).alpha == 1);
  CHECK(independence_number(no_sgc_family(1).graph).alpha == 9);
  CHECK(independence_number(cycle_graph(7)).alpha == 3);
}

TEST_CASE("vertex connectivity examples") {
  CHECK(vertex_connectivity(complete_bipartite(2, 4).graph).kappa == 2);
  auto k5 = vertex_connectivity(complete_graph(5));
  CHECK(k5.kappa == 4);
  CHECK(k5.complete);
  CHECK_FALSE(k5.separator.has_value());

  auto fam = vertex_connectivity(no_sgc_family(1).graph);
  CHECK(fam.kappa == 1);
  REQUIRE(fam.separator);
  CHECK(is_separator(no_sgc_family(1).graph, *fam.separator));

  CHECK(vertex_connectivity(Graph(1, std::span<const Edge>{})).kappa == 0);
  CHECK(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})).kappa == 0);
  CHECK(vertex_connectivity(wheel_graph(5)).kappa == 3);
  CHECK(vertex_connectivity(path_graph(5)).kappa == 1);
}

TEST_CASE("alpha and kappa agree with brute force on every connected graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      REQUIRE(independence_number(g).alpha == oracle::alpha(g));
      REQUIRE(vertex_connectivity(g).kappa == oracle::kappa(g));
    }
  }
}

TEST_CASE("alpha and kappa agree with brute force on random 7 and 8 vertex graphs") {
  for (int n = 7; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Graph g = random_connected(n, 0.2 + 0.01 * static_cast<double>(seed), seed);
      CHECK(independence_number(g).alpha == oracle::alpha(g));
      CHECK(vertex_connectivity(g).kappa == oracle::kappa(g));
      check_witnesses(g);
    }
  }
}

TEST_CASE("adding an edge never increases alpha") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_connected(10, 0.3, seed);
    std::vector<Edge> edges = g.edges();
    for (Vertex u = 0; u < g.order() && edges.size() == g.size(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!g.adjacent(u, v)) {
          edges.push_back({u, v});
          break;
        }
      }
    }
    Graph h(g.order(), edges);
    CHECK(independence_number(h).alpha <= independence_number(g).alpha);
    CHECK(vertex_connectivity(h).kappa >= vertex_connectivity(g).kappa);
  }
}

TEST_CASE("independence search reports exhaustion honestly") {
  Graph g = complete_bipartite(20, 25).graph;
  auto tight = independence_number(g, Budget::of_nodes(3));
  CHECK(is_independent_set(g, tight.witness));
  CHECK(tight.alpha <= 25);
  auto full = independence_number(g);
  CHECK(full.exhaustive);
  CHECK(full.alpha == 25);
}

TEST_CASE("disjoint paths and minimum cuts") {
  Graph c6 = cycle_graph(6);
  auto dp = disjoint_paths(c6, 0, 3, 5);
  CHECK(dp.value == 2);
  REQUIRE(dp.paths.size() == 2);
  for (const auto& p : dp.paths) {
    CHECK(p.front() == 0);
    CHECK(p.back() == 3);
  }
  auto cut = min_vertex_cut(c6, 0, 3);
  CHECK(cut.size == 2);
  CHECK(is_separator(c6, cut.separator));

  // Menger: max disjoint paths equals min cut on random non-adjacent pairs.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_connected(9, 0.4, seed);
    for (Vertex t = 1; t < g.order(); ++t) {
      if (g.adjacent(0, t)) continue;
      CHECK(disjoint_paths(g, 0, t, g.order()).value == min_vertex_cut(g, 0, t).size);
    }
  }
}
