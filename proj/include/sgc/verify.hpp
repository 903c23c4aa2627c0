#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/graph_io.hpp"
#include "sgc/search.hpp"
#include "sgc/serialize.hpp"

namespace sgc {

/// Connected graphs to check. Disconnected inputs are dropped on load and
/// counted in `disconnected`.
struct Corpus {
  std::string source;
  std::vector<Graph> graphs;
  std::size_t disconnected = 0;
};

/// Every labeled connected graph on 1..max_n vertices, by order and then by
/// edge pattern.
Corpus embedded_corpus(int max_n);
Corpus file_corpus(const std::string& path, GraphFormat format);
Corpus corpus_from_graphs(std::string source, std::vector<Graph> graphs);
/// `count` graphs from random_connected(n, p, seed + i).
Corpus random_corpus(int n, double p, std::uint64_t seed, int count);

enum class Execution { serial, parallel };

struct CheckOptions {
  Budget budget{};
  Execution execution = Execution::parallel;
};

struct Violation {
  std::string graph6;
  Json detail;
};

struct TheoremReport {
  std::string theorem_id;
  /// "claim" for statements asserted as proven, "refutation" for the disjoint
  /// path bound and "conjecture-scan" for the branch-vertex bound.
  std::string status = "claim";
  std::size_t corpus_size = 0;
  /// Disconnected inputs plus graphs the claim does not speak about (kappa = 0).
  std::size_t skipped = 0;
  /// Graphs whose hypothesis was decided false.
  std::size_t excluded = 0;
  /// Graphs whose hypothesis holds or could not be decided in budget.
  std::size_t hypothesis_count = 0;
  std::size_t verified = 0;
  std::vector<Violation> violations;
  std::size_t timeouts = 0;
  /// Verified counts per proof route, for checks with more than one route.
  std::map<std::string, std::size_t> modes;
  double elapsed_ms = 0;
};

Json to_json(const TheoremReport& r, bool with_timing = true);

/// Result of checking one graph.
struct Outcome {
  enum class Kind { skipped, excluded, verified, violation, timeout };
  Kind kind = Kind::timeout;
  Json detail{};
};

/// s(G) <= 2 ceil(alpha / kappa) - 2, scanned as an open conjecture.
TheoremReport check_branch_bound(const Corpus& corpus, const CheckOptions& opt = {});
/// Coverability of K_{m,2m} by ceil(alpha / kappa) disjoint paths for each m
/// in [m_lo, m_hi]; every failure is recorded as a violation (refutation).
TheoremReport refute_disjoint_path_bound(int m_lo, int m_hi, const CheckOptions& opt = {});
/// Coverability by ceil(alpha / kappa) cycles (shared vertices allowed).
TheoremReport check_cycle_cover_bound(const Corpus& corpus, const CheckOptions& opt = {});
/// s(G) <= kappa implies the low-branch construction returns a certificate.
TheoremReport check_low_branch_construction(const Corpus& corpus, const CheckOptions& opt = {});
/// alpha <= (kappa^2 + kappa) / 2 implies a spanning generalized caterpillar.
TheoremReport check_quadratic_independence(const Corpus& corpus, const CheckOptions& opt = {});
/// The no-SGC family has no spanning generalized caterpillar, decided outright
/// or, when that exceeds the budget, through its counting sub-claims.
TheoremReport check_no_sgc_construction(int m_lo, int m_hi, const CheckOptions& opt = {});
/// alpha <= 2 kappa + 1 implies a bounded spanning 3-tree and a certificate
/// of maximum degree at most 5.
TheoremReport check_bounded_3tree_construction(const Corpus& corpus, const CheckOptions& opt = {});

/// Ids accepted by run_corpus_check / replay_violation.
inline constexpr std::string_view kCorpusCheckIds[] = {"lemma3", "lemma5", "theorem1", "corollary", "theorem3"};
inline constexpr std::string_view kRangeCheckIds[] = {"lemma4", "theorem2"};

bool is_corpus_check(std::string_view id);
bool is_range_check(std::string_view id);

/// Throws std::invalid_argument for an unknown id.
TheoremReport run_corpus_check(std::string_view id, const Corpus& corpus, const CheckOptions& opt = {});
TheoremReport run_range_check(std::string_view id, int m_lo, int m_hi, const CheckOptions& opt = {});

/// Re-runs the per-graph check behind a recorded violation. True when the
/// violation is reproduced.
bool replay_violation(std::string_view id, const Violation& v, const Budget& budget = {});

/// Generic driver: evaluates `check(i)` for i in [0, count) and folds the
/// outcomes in index order, so serial and parallel runs give equal reports.
TheoremReport run_checks(std::string theorem_id, std::size_t count, const std::function<Outcome(std::size_t)>& check,
                         const std::function<std::string(std::size_t)>& graph6_of, Execution execution);

}  // namespace sgc
