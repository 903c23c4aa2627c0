#pragma once

#include <span>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

// Menger-type primitives on the vertex-split network: every vertex v becomes
// in(v) -> out(v) with capacity 1, every edge becomes two uncapacitated arcs.

struct DisjointPaths {
  int value = 0;
  /// Each path lists vertices from the source side to the sink side.
  std::vector<std::vector<Vertex>> paths;
};

/// Up to `limit` internally vertex-disjoint s-t paths (s != t). If s and t
/// are adjacent the edge st counts as one of the paths.
DisjointPaths disjoint_paths(const Graph& g, Vertex s, Vertex t, int limit);

/// Up to `limit` paths from `origin` to distinct members of `targets`,
/// pairwise sharing only the origin and containing no target except their
/// last vertex. `origin` must not be in `targets`.
DisjointPaths fan_paths(const Graph& g, Vertex origin, std::span<const Vertex> targets, int limit);

struct VertexCut {
  int size = 0;
  std::vector<Vertex> separator;
};

/// Minimum vertex set separating non-adjacent s and t. Its size equals the
/// maximum number of internally disjoint s-t paths.
VertexCut min_vertex_cut(const Graph& g, Vertex s, Vertex t);

}  // namespace sgc
