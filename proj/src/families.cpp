#include "sgc/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sgc/generators.hpp"
#include "sgc/invariants.hpp"

namespace sgc {

NoSgcFamily no_sgc_family(int m) {
  if (m < 1) throw std::invalid_argument("no_sgc_family: m must be at least 1");
  NoSgcFamily f;
  f.m = m;
  for (Vertex v = 0; v < m; ++v) f.s_vertices.push_back(v);

  std::vector<Edge> edges;
  for (int i = 0; i < m + 2; ++i) {
    const Vertex base = m + i * (3 * m + 1);
    FamilyCopy copy;
    for (Vertex k = 0; k < 2 * m + 1; ++k) copy.b_side.push_back(base + k);
    for (Vertex k = 0; k < m; ++k) copy.a_side.push_back(base + 2 * m + 1 + k);
    copy.selected.assign(copy.b_side.begin(), copy.b_side.begin() + m);
    for (Vertex a : copy.a_side) {
      for (Vertex b : copy.b_side) edges.push_back(make_edge(a, b));
    }
    for (Vertex t : copy.selected) {
      for (Vertex s : f.s_vertices) edges.push_back(make_edge(t, s));
    }
    f.copies.push_back(std::move(copy));
  }
  f.graph = Graph(no_sgc_family_order(m), edges);
  return f;
}

std::optional<std::string> check_no_sgc_family(const NoSgcFamily& f) {
  const int m = f.m;
  if (m < 1) return "m must be at least 1";
  if (f.graph.order() != no_sgc_family_order(m)) return "wrong vertex count";
  if (static_cast<int>(f.s_vertices.size()) != m) return "S must have m vertices";
  if (!is_independent_set(f.graph, f.s_vertices)) return "S is not independent";
  if (static_cast<int>(f.copies.size()) != m + 2) return "expected m+2 copies";

  std::vector<int> owner(static_cast<std::size_t>(f.graph.order()), -2);
  for (Vertex s : f.s_vertices) {
    if (owner[static_cast<std::size_t>(s)] != -2) return "S repeats a vertex";
    owner[static_cast<std::size_t>(s)] = -1;
  }
  std::set<Edge> expected;
  for (std::size_t i = 0; i < f.copies.size(); ++i) {
    const auto& c = f.copies[i];
    if (static_cast<int>(c.a_side.size()) != m || static_cast<int>(c.b_side.size()) != 2 * m + 1) {
      return "copy " + std::to_string(i) + " is not K_{2m+1,m}";
    }
    if (static_cast<int>(c.selected.size()) != m) return "copy " + std::to_string(i) + " must select m vertices";
    for (Vertex v : c.selected) {
      if (std::find(c.b_side.begin(), c.b_side.end(), v) == c.b_side.end()) return "selected vertex outside B";
    }
    for (const auto* side : {&c.a_side, &c.b_side}) {
      for (Vertex v : *side) {
        if (v < 0 || v >= f.graph.order() || owner[static_cast<std::size_t>(v)] != -2) {
          return "copies are not vertex-disjoint";
        }
        owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
    }
    for (Vertex a : c.a_side) {
      for (Vertex b : c.b_side) expected.insert(make_edge(a, b));
    }
    for (Vertex t : c.selected) {
      for (Vertex s : f.s_vertices) expected.insert(make_edge(t, s));
    }
  }
  if (std::count(owner.begin(), owner.end(), -2) != 0) return "some vertex belongs to no part";
  std::set<Edge> actual(f.graph.edges().begin(), f.graph.edges().end());
  if (actual != expected) return "edge set differs from the construction";
  return std::nullopt;
}

BipartiteGraph path_cover_counterexample(int m) {
  if (m < 1) throw std::invalid_argument("path_cover_counterexample: m must be at least 1");
  return complete_bipartite(m, 2 * m);
}

}  // namespace sgc
