#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sgc {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a normalized graph: reversed and repeated pairs collapse to one
  /// edge. Throws std::invalid_argument on a loop or an endpoint outside
  /// 0..n-1.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Sorted, normalized edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// True when neighbor_mask() is available (n <= 64).
  bool has_masks() const { return !masks_.empty() || n_ == 0; }
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }
  /// Mask with the low n bits set.
  std::uint64_t vertex_mask() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void build(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
};

inline constexpr int kMaxMaskOrder = 64;

/// Throws std::invalid_argument if g is too large for the bitmask solvers.
void require_mask_order(const Graph& g, const char* who);

struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

struct BipartiteGraph {
  Graph graph;
  Bipartition parts;
};

/// n == 0 counts as disconnected.
bool is_connected(const Graph& g);

/// Two-colouring witness; side_a holds the colour class of vertex 0 in each
/// component. nullopt when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Connectivity of g with the vertices in `removed` deleted.
bool is_connected_without(const Graph& g, std::span<const Vertex> removed);

/// Generic structural validator: endpoints in range, no loops, sorted and
/// unique edges, symmetric adjacency.
bool is_well_formed(const Graph& g);

}  // namespace sgc
