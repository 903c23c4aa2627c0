#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/search.hpp"
#include "sgc/spanning.hpp"
#include "sgc/tree.hpp"

namespace sgc {

/// Paths from one origin to distinct targets, pairwise meeting only at the
/// origin.
struct Fan {
  Vertex origin = 0;
  std::vector<std::vector<Vertex>> paths;
};

/// k-path fan from `origin` into `targets`, each path touching the target set
/// only at its last vertex. nullopt when no such fan exists (in particular
/// when k > |targets|). Throws std::invalid_argument if origin is a target.
std::optional<Fan> vertex_disjoint_fan(const Graph& g, Vertex origin, std::span<const Vertex> targets, int k);

/// A cycle of length >= 3 listed in traversal order.
struct CycleWitness {
  std::vector<Vertex> cycle;
};

struct CycleThroughOptions {
  /// Exhaustive search when fan absorption cannot make progress (only for
  /// graphs with at most kCycleFallbackOrder vertices).
  bool allow_fallback = true;
};

inline constexpr int kCycleFallbackOrder = 12;

/// A cycle through every vertex of `required` (2 <= |required|). Starts from
/// two disjoint paths between two required vertices, then absorbs each
/// remaining required vertex through a fan into the current cycle. Succeeds
/// whenever |required| <= kappa(g); the caller is responsible for that
/// precondition. Throws std::domain_error when no cycle is produced.
CycleWitness cycle_through(const Graph& g, std::span<const Vertex> required, CycleThroughOptions options = {});

/// Exhaustive search for a cycle through `required`, for small graphs.
std::optional<CycleWitness> cycle_through_exhaustive(const Graph& g, std::span<const Vertex> required);

std::optional<std::string> check_cycle(const Graph& g, const CycleWitness& c);

/// Adds the cycle's edges to the tree, removes the smallest cycle edge e, and
/// breaks every remaining cycle by removing its smallest edge outside the path
/// C - e. The result is a spanning tree whose branch vertices all lie on
/// C - e, returned as the spine. Each vertex gains at most two edges.
/// Throws std::invalid_argument if a branch vertex of `tree` is off the cycle.
CaterpillarCertificate merge_and_prune(const Graph& g, const SpanningTree& tree, const CycleWitness& cycle);

enum class ConstructionStatus { certificate, hypothesis_failed, budget_exhausted };

std::string_view to_string(ConstructionStatus s);

struct Construction {
  ConstructionStatus status = ConstructionStatus::budget_exhausted;
  std::optional<CaterpillarCertificate> certificate;
  /// Spanning tree fed into the merge step, when one was found.
  std::optional<SpanningTree> base_tree;
  std::string reason;
};

/// When some spanning tree has at most kappa(g) branch vertices: take a tree
/// with the fewest branch vertices, route a cycle through them and merge.
Construction construct_sgc_low_branch(const Graph& g, const Budget& budget = {});

/// Spanning tree with maximum degree 3 and at most `max_degree3` vertices of
/// degree 3.
TreeSearch spanning_3tree_bounded(const Graph& g, int max_degree3, const Budget& budget = {});

/// When alpha(g) <= 2 kappa(g) + 1: a spanning 3-tree with at most kappa
/// degree-3 vertices, then the same cycle-and-merge step. The certificate's
/// tree has maximum degree at most 5.
Construction construct_sgc_bounded_3tree(const Graph& g, const Budget& budget = {});

}  // namespace sgc
