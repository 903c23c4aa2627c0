#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "sgc/generators.hpp"
#include "sgc/graph.hpp"
#include "sgc/graph_io.hpp"

using namespace sgc;

TEST_CASE("graph construction normalizes edges") {
  Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.size() == 3);
  CHECK(triangle == complete_graph(3));

  Graph doubled(2, {{0, 1}, {1, 0}});
  CHECK(doubled.size() == 1);
  CHECK(doubled.adjacent(1, 0));

  CHECK_THROWS_AS(Graph(4, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("graph6 hand-encoded examples") {
  // K_2: n=2 -> 'A'; one upper-triangle bit (0,1) -> 100000 -> '_'.
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  // K_3: bits (0,1),(0,2),(1,2) = 111000 -> 56 + 63 = 'w'.
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(emit_graph6(complete_graph(3)) == "Bw");
  CHECK(emit_graph6(Graph(1, std::span<const Edge>{})) == "@");
}

TEST_CASE("graph6 rejects malformed text") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // missing body
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);     // too long
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);      // padding bit set
  CHECK_THROWS_AS(parse_graph6("A\x7f"), ParseError);   // out of range

  std::istringstream lines("Bw\nA_\nnot-a-graph\n");
  try {
    read_graph6_stream(lines);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("graph6 round trip over all labeled graphs up to 5 vertices and samples up to 12") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  for (int n = 6; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Graph g = random_connected(n, 0.35, seed);
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
  }
  Graph big = complete_bipartite(20, 40).graph;
  CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("edge-list format") {
  std::istringstream in("# two graphs\n3 2\n0 1\n1 2\n\n2 1\n0 1\n");
  auto graphs = read_edgelist_stream(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == path_graph(3));
  CHECK(graphs[1] == complete_graph(2));

  Graph w = wheel_graph(5);
  std::istringstream again(emit_edgelist(w));
  CHECK(read_edgelist_stream(again).at(0) == w);

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edgelist_stream(bad), ParseError);
}

TEST_CASE("generators") {
  auto k24 = complete_bipartite(2, 4);
  CHECK(k24.graph.order() == 6);
  CHECK(k24.graph.size() == 8);
  CHECK(complete_bipartite(6, 12).graph.size() == 72);
  for (Vertex a : k24.parts.side_a) CHECK(k24.graph.degree(a) == 4);
  for (Vertex b : k24.parts.side_b) CHECK(k24.graph.degree(b) == 2);

  auto star = complete_bipartite(1, 3).graph;
  CHECK(star.degree(0) == 3);

  CHECK(path_graph(5).size() == 4);
  CHECK(cycle_graph(4).size() == 4);
  CHECK(complete_graph(4).size() == 6);
  CHECK(wheel_graph(5).size() == 10);
  CHECK(wheel_graph(5).degree(0) == 5);

  CHECK(random_connected(5, 1.0, 123) == complete_graph(5));
  CHECK(random_connected(1, 0.0, 9).order() == 1);
  CHECK(random_connected(8, 0.4, 7) == random_connected(8, 0.4, 7));
  CHECK_THROWS_AS(random_connected(3, 0.0, 1), std::runtime_error);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_connected(9, 0.3, seed);
    CHECK(is_well_formed(g));
    CHECK(is_connected(g));
  }
}

TEST_CASE("connectivity and bipartition") {
  auto k24 = complete_bipartite(2, 4).graph;
  CHECK(is_connected(k24));
  auto parts = bipartition(k24);
  REQUIRE(parts);
  CHECK(parts->side_a.size() == 2);
  CHECK(parts->side_b.size() == 4);

  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));

  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());

  std::vector<Vertex> hub{0};
  CHECK(is_connected_without(wheel_graph(5), hub));
  std::vector<Vertex> middle{2};
  CHECK_FALSE(is_connected_without(path_graph(5), middle));
}
