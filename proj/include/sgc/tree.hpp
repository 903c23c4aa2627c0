#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Edge subset of a host graph on `order` vertices. Hosts are passed
/// explicitly to the validators rather than referenced from here.
struct SpanningTree {
  int order = 0;
  std::vector<Edge> edges;

  std::vector<int> degrees() const;
  std::vector<std::vector<Vertex>> adjacency() const;
  int max_degree() const;
  /// View as a standalone graph on the same vertex set.
  Graph as_graph() const { return Graph(order, edges); }
  bool operator==(const SpanningTree&) const = default;
};

/// Normalizes and sorts the edges.
SpanningTree make_tree(int order, std::vector<Edge> edges);

/// nullopt when t is a spanning tree of host, otherwise the first defect.
std::optional<std::string> check_spanning_tree(const Graph& host, const SpanningTree& t);
/// Acyclic and connected on t.order vertices, ignoring any host.
bool is_tree(const SpanningTree& t);

struct BranchProfile {
  std::vector<Vertex> branch_vertices;   // degree > 2
  std::vector<Vertex> degree3_vertices;  // degree == 3
  int max_degree = 0;
};

BranchProfile branch_profile(const SpanningTree& t);

/// A tree plus a spine: a path of the tree that carries every branch vertex.
struct CaterpillarCertificate {
  SpanningTree tree;
  std::vector<Vertex> spine;
};

/// nullopt when `cert.tree` spans `host` and the spine is a tree path through
/// every branch vertex.
std::optional<std::string> check_certificate(const Graph& host, const CaterpillarCertificate& cert);

enum class TreeShape { path, spider, caterpillar, generalized_caterpillar, other };

std::string_view to_string(TreeShape shape);

struct TreeClassification {
  /// Finest class, tried in the order path, spider, caterpillar,
  /// generalized caterpillar.
  TreeShape shape = TreeShape::other;
  bool is_spider = false;  // at most one branch vertex
  bool is_caterpillar = false;
  bool is_generalized_caterpillar = false;
  /// Present whenever the tree is a generalized caterpillar; the spine is the
  /// shortest path containing all branch vertices (the whole path for path
  /// trees).
  std::optional<CaterpillarCertificate> certificate;
};

/// Linear-time classification. Precondition: is_tree(t).
TreeClassification classify_tree(const SpanningTree& t);

}  // namespace sgc
