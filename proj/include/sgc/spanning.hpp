#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "sgc/graph.hpp"
#include "sgc/search.hpp"
#include "sgc/tree.hpp"

namespace sgc {

struct EnumerationResult {
  std::uint64_t visited = 0;
  bool truncated = false;
};

/// Calls `visit` once for every spanning tree of a connected graph, stopping
/// after `cap` trees. Binary partition over the edges: each tree corresponds
/// to exactly one include/exclude pattern.
EnumerationResult enumerate_spanning_trees(const Graph& g, const std::function<void(const SpanningTree&)>& visit,
                                           std::uint64_t cap = std::numeric_limits<std::uint64_t>::max());

/// Budgeted search for a single spanning tree.
struct TreeSearch {
  Verdict verdict = Verdict::unknown;
  std::optional<SpanningTree> tree;
};

/// Spanning tree with maximum degree 2.
TreeSearch hamiltonian_path(const Graph& g, const Budget& budget = {});

/// Spanning tree with at most one branch vertex.
TreeSearch spanning_spider(const Graph& g, const Budget& budget = {});

struct DegreeLimits {
  int max_degree = std::numeric_limits<int>::max();
  /// Cap on the number of vertices of degree three or more.
  int max_branch = std::numeric_limits<int>::max();
};

/// Spanning tree obeying both limits, by edge branching with connectivity
/// pruning.
TreeSearch degree_constrained_spanning_tree(const Graph& g, DegreeLimits limits, const Budget& budget = {});

struct MinBranchResult {
  /// s(G) when exact, otherwise the best upper bound found.
  int branch_count = 0;
  SpanningTree witness;
  bool exact = false;
};

/// Minimum number of branch vertices over all spanning trees, by iterative
/// deepening on the allowed branch count.
MinBranchResult min_branch_spanning_tree(const Graph& g, const Budget& budget = {});

enum class SgcMethod {
  /// Grows a spine and hangs paths off it; memoized over covered sets.
  spine_search,
  /// Classifies every spanning tree; `budget.nodes` caps the tree count.
  enumeration,
};

struct SgcDecision {
  Verdict verdict = Verdict::unknown;
  std::optional<CaterpillarCertificate> certificate;
};

/// Does g have a spanning generalized caterpillar? A "yes" carries a
/// validated certificate; "no" is only returned after exhaustive search.
SgcDecision decide_sgc(const Graph& g, const Budget& budget = {}, SgcMethod method = SgcMethod::spine_search);

}  // namespace sgc
