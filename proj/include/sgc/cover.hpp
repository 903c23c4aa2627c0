#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/search.hpp"

namespace sgc {

/// Pairwise vertex-disjoint paths covering every vertex. A single vertex is a
/// path.
struct PathCover {
  std::vector<std::vector<Vertex>> paths;
};

/// Cycles covering every vertex, possibly sharing vertices. Entries with one
/// vertex or two adjacent vertices are degenerate cycles.
struct CycleCover {
  std::vector<std::vector<Vertex>> cycles;
};

std::optional<std::string> check_path_cover(const Graph& g, const PathCover& cover);
std::optional<std::string> check_cycle_cover(const Graph& g, const CycleCover& cover);

/// Orients each path so its first vertex is the smaller end, then sorts.
void canonicalize(PathCover& cover);

struct PathCoverOptions {
  /// For bipartite g with sides A and B, each path has at most one more
  /// vertex on either side than on the other, so | |A| - |B| | <= k is
  /// necessary. Checked before searching when enabled.
  bool counting_prune = true;
};

struct PathCoverDecision {
  Verdict verdict = Verdict::unknown;
  std::optional<PathCover> cover;
  /// True when a "no" came from the counting bound alone.
  bool by_counting = false;
};

/// Can g be covered by at most k vertex-disjoint paths? Requires n <= 64.
PathCoverDecision disjoint_path_cover(const Graph& g, int k, const Budget& budget = {},
                                      PathCoverOptions options = {});

struct CoverNumber {
  /// Exact value; nullopt when the budget ran out first.
  std::optional<int> value;
  /// Largest k proven insufficient, plus one.
  int lower_bound = 1;
  std::optional<PathCover> path_witness;
  std::optional<CycleCover> cycle_witness;
};

CoverNumber path_cover_number(const Graph& g, const Budget& budget = {}, PathCoverOptions options = {});

struct CycleCoverDecision {
  Verdict verdict = Verdict::unknown;
  std::optional<CycleCover> cover;
};

inline constexpr int kMaxCycleCoverOrder = 20;

/// Can g be covered by at most k (non-disjoint, possibly degenerate) cycles?
/// Requires n <= kMaxCycleCoverOrder.
CycleCoverDecision cycle_cover(const Graph& g, int k, const Budget& budget = {});

CoverNumber cycle_cover_number(const Graph& g, const Budget& budget = {});

}  // namespace sgc
