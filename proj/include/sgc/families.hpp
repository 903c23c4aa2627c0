#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// One K_{2m+1,m} block of the no-SGC family.
struct FamilyCopy {
  std::vector<Vertex> a_side;    // m vertices
  std::vector<Vertex> b_side;    // 2m+1 vertices
  std::vector<Vertex> selected;  // first m vertices of b_side
};

/// m+2 disjoint copies of K_{2m+1,m}, glued through an independent set S of
/// size m: every selected vertex of every copy is joined to all of S.
struct NoSgcFamily {
  int m = 0;
  Graph graph;
  std::vector<Vertex> s_vertices;
  std::vector<FamilyCopy> copies;
};

/// Labels S = 0..m-1, then the copies in order, each listing B before A.
/// Throws std::invalid_argument for m < 1.
NoSgcFamily no_sgc_family(int m);

inline int no_sgc_family_order(int m) { return m + (m + 2) * (3 * m + 1); }

/// nullopt when `f` has exactly the prescribed vertex sets and edges.
std::optional<std::string> check_no_sgc_family(const NoSgcFamily& f);

/// K_{m,2m}, which has alpha = 2 kappa = 2m yet needs more than two disjoint
/// paths to cover once m >= 3. Throws std::invalid_argument for m < 1.
BipartiteGraph path_cover_counterexample(int m);

}  // namespace sgc
