#include "sgc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>

#include "sgc/constructive.hpp"
#include "sgc/cover.hpp"
#include "sgc/families.hpp"
#include "sgc/generators.hpp"
#include "sgc/invariants.hpp"
#include "sgc/spanning.hpp"

namespace sgc {

namespace {

using Kind = Outcome::Kind;

Outcome make(Kind kind, Json detail = {}) { return {kind, std::move(detail)}; }

inline constexpr int kMaxEmbeddedOrder = 7;
inline constexpr int kMaxBipartiteParameter = 20;

// Independence number when proven; nullopt sends the graph to timeouts.
std::optional<int> exact_alpha(const Graph& g, const Budget& b) {
  auto a = independence_number(g, b);
  if (!a.exhaustive) return std::nullopt;
  return a.alpha;
}

Outcome branch_bound_kernel(const Graph& g, const Budget& b) {
  const int kappa = vertex_connectivity(g).kappa;
  if (kappa == 0) return make(Kind::skipped);
  auto alpha = exact_alpha(g, b);
  if (!alpha) return make(Kind::timeout);
  const int bound = 2 * ceil_div(*alpha, kappa) - 2;
  auto mb = min_branch_spanning_tree(g, b);
  if (mb.branch_count <= bound) return make(Kind::verified);
  if (!mb.exact) return make(Kind::timeout);
  return make(Kind::violation, {{"s", mb.branch_count},
                                {"alpha", *alpha},
                                {"kappa", kappa},
                                {"bound", bound},
                                {"tree", to_json(mb.witness)}});
}

Outcome disjoint_path_kernel(const Graph& g, const Budget& b) {
  const int kappa = vertex_connectivity(g).kappa;
  if (kappa == 0) return make(Kind::skipped);
  auto alpha = exact_alpha(g, b);
  if (!alpha) return make(Kind::timeout);
  const int k = ceil_div(*alpha, kappa);
  auto d = disjoint_path_cover(g, k, b);
  if (d.verdict == Verdict::yes) return make(Kind::verified);
  if (d.verdict == Verdict::unknown) return make(Kind::timeout);

  Json detail = {{"n", g.order()}, {"alpha", *alpha}, {"kappa", kappa}, {"paths_allowed", k},
                 {"refuted_by_counting", d.by_counting}};
  if (g.order() <= 15) {
    auto plain = disjoint_path_cover(g, k, b, {.counting_prune = false});
    detail["exhaustive_verdict"] = to_string(plain.verdict);
  }
  if (g.order() % 3 == 0 && *alpha == 2 * kappa && 3 * kappa == g.order()) {
    // For K_{m,2m}: a spanning tree from two paths and at most two joining
    // edges has at most 2m+4 edges, against the 3m-1 every spanning tree has.
    const int m = kappa;
    detail["m"] = m;
    detail["edge_count_argument"] = {{"tree_edges", 3 * m - 1}, {"edges_available", 2 * m + 4},
                                     {"applies", 3 * m - 1 > 2 * m + 4}};
  }
  return make(Kind::violation, std::move(detail));
}

Outcome cycle_cover_kernel(const Graph& g, const Budget& b) {
  const int kappa = vertex_connectivity(g).kappa;
  if (kappa == 0) return make(Kind::skipped);
  if (g.order() > kMaxCycleCoverOrder) return make(Kind::timeout);
  auto alpha = exact_alpha(g, b);
  if (!alpha) return make(Kind::timeout);
  const int k = ceil_div(*alpha, kappa);
  auto d = cycle_cover(g, k, b);
  if (d.verdict == Verdict::yes) return make(Kind::verified);
  if (d.verdict == Verdict::unknown) return make(Kind::timeout);
  return make(Kind::violation, {{"alpha", *alpha}, {"kappa", kappa}, {"cycles_allowed", k}});
}

Outcome construction_outcome(const Graph& g, const Construction& c, int max_degree, Json context) {
  switch (c.status) {
    case ConstructionStatus::budget_exhausted: return make(Kind::timeout);
    case ConstructionStatus::hypothesis_failed:
      context["error"] = c.reason;
      return make(Kind::violation, std::move(context));
    case ConstructionStatus::certificate: break;
  }
  if (auto err = check_certificate(g, *c.certificate)) {
    context["error"] = *err;
    return make(Kind::violation, std::move(context));
  }
  if (c.certificate->tree.max_degree() > max_degree) {
    context["error"] = "certificate degree exceeds " + std::to_string(max_degree);
    context["certificate"] = to_json(*c.certificate);
    return make(Kind::violation, std::move(context));
  }
  return make(Kind::verified);
}

Outcome low_branch_kernel(const Graph& g, const Budget& b) {
  const int kappa = vertex_connectivity(g).kappa;
  Construction c;
  try {
    c = construct_sgc_low_branch(g, b);
  } catch (const std::exception& e) {
    return make(Kind::violation, {{"kappa", kappa}, {"error", e.what()}});
  }
  // The pipeline reports a failed hypothesis only after computing s exactly.
  if (c.status == ConstructionStatus::hypothesis_failed) return make(Kind::excluded);
  return construction_outcome(g, c, g.order(), {{"kappa", kappa}});
}

Outcome quadratic_independence_kernel(const Graph& g, const Budget& b) {
  const int kappa = vertex_connectivity(g).kappa;
  if (kappa == 0) return make(Kind::skipped);
  auto a = independence_number(g, b);
  const int limit = (kappa * kappa + kappa) / 2;
  if (a.alpha > limit) return make(Kind::excluded);
  if (!a.exhaustive) return make(Kind::timeout);
  auto d = decide_sgc(g, b);
  if (d.verdict == Verdict::yes) return make(Kind::verified);
  if (d.verdict == Verdict::unknown) return make(Kind::timeout);
  return make(Kind::violation, {{"alpha", a.alpha}, {"kappa", kappa}, {"limit", limit}});
}

Outcome bounded_3tree_kernel(const Graph& g, const Budget& b) {
  const int kappa = vertex_connectivity(g).kappa;
  if (kappa == 0) return make(Kind::skipped);
  auto a = independence_number(g, b);
  const int limit = 2 * kappa + 1;
  if (a.alpha > limit) return make(Kind::excluded);
  if (!a.exhaustive) return make(Kind::timeout);
  Json context = {{"alpha", a.alpha}, {"kappa", kappa}};

  auto base = spanning_3tree_bounded(g, kappa, b);
  if (base.verdict == Verdict::unknown) return make(Kind::timeout);
  if (base.verdict == Verdict::no) {
    context["error"] = "no spanning 3-tree with at most kappa degree-3 vertices";
    return make(Kind::violation, std::move(context));
  }
  Construction c;
  try {
    c = construct_sgc_bounded_3tree(g, b);
  } catch (const std::exception& e) {
    context["error"] = e.what();
    return make(Kind::violation, std::move(context));
  }
  return construction_outcome(g, c, 5, std::move(context));
}

Outcome no_sgc_kernel(int m, const Budget& b) {
  const NoSgcFamily f = no_sgc_family(m);
  Json detail = {{"m", m}, {"n", f.graph.order()}};
  if (auto err = check_no_sgc_family(f)) {
    detail["error"] = *err;
    return make(Kind::violation, std::move(detail));
  }
  if (f.graph.order() <= kMaxMaskOrder) {
    auto d = decide_sgc(f.graph, b);
    if (d.verdict == Verdict::no) return make(Kind::verified, {{"mode", "exhaustive"}});
    if (d.verdict == Verdict::yes) {
      detail["certificate"] = to_json(*d.certificate);
      return make(Kind::violation, std::move(detail));
    }
  }
  // Sub-claims: a K_{2m+1,m} block cannot be covered by m disjoint paths, so
  // the spine meets every block; then at least 2(m+2-2)+2 spine edges join a
  // block to S, more than the 2|S| = 2m a path through S can carry.
  auto block = complete_bipartite(2 * m + 1, m);
  auto pc = path_cover_number(block.graph, b);
  const int attachments = 2 * ((m + 2) - 2) + 2;
  detail["path_cover_lower_bound"] = pc.lower_bound;
  detail["required_paths"] = m + 1;
  detail["spine_edges_into_s"] = attachments;
  detail["spine_capacity_at_s"] = 2 * m;
  if (pc.lower_bound >= m + 1 && attachments > 2 * m) return make(Kind::verified, {{"mode", "sub-claims"}});
  if (!pc.value) return make(Kind::timeout);
  detail["error"] = "sub-claim failed";
  return make(Kind::violation, std::move(detail));
}

using Kernel = Outcome (*)(const Graph&, const Budget&);

struct CorpusCheck {
  std::string_view id;
  std::string_view status;
  Kernel kernel;
};

constexpr CorpusCheck kCorpusChecks[] = {
    {"lemma3", "conjecture-scan", branch_bound_kernel},
    {"lemma5", "claim", cycle_cover_kernel},
    {"theorem1", "claim", low_branch_kernel},
    {"corollary", "claim", quadratic_independence_kernel},
    {"theorem3", "claim", bounded_3tree_kernel},
};

const CorpusCheck& corpus_check(std::string_view id) {
  for (const auto& c : kCorpusChecks) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown corpus check: " + std::string(id));
}

TheoremReport over_corpus(std::string_view id, const Corpus& corpus, const CheckOptions& opt) {
  const auto& c = corpus_check(id);
  auto report = run_checks(
      std::string(id), corpus.graphs.size(), [&](std::size_t i) { return c.kernel(corpus.graphs[i], opt.budget); },
      [&](std::size_t i) { return emit_graph6(corpus.graphs[i]); }, opt.execution);
  report.status = std::string(c.status);
  report.corpus_size += corpus.disconnected;
  report.skipped += corpus.disconnected;
  return report;
}

void require_range(int m_lo, int m_hi) {
  if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("m range must satisfy 1 <= lo <= hi");
}

std::string graph6_or_empty(const Graph& g) { return g.order() <= 62 ? emit_graph6(g) : std::string(); }

}  // namespace

Corpus embedded_corpus(int max_n) {
  if (max_n < 1 || max_n > kMaxEmbeddedOrder) {
    throw std::invalid_argument("embedded corpus supports 1 <= max_n <= " + std::to_string(kMaxEmbeddedOrder));
  }
  Corpus c;
  c.source = "embedded:" + std::to_string(max_n);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }
    const std::uint64_t patterns = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1) edges.push_back(pairs[k]);
      }
      Graph g(n, edges);
      if (is_connected(g)) c.graphs.push_back(std::move(g));
    }
  }
  return c;
}

Corpus corpus_from_graphs(std::string source, std::vector<Graph> graphs) {
  Corpus c;
  c.source = std::move(source);
  for (auto& g : graphs) {
    if (is_connected(g)) {
      c.graphs.push_back(std::move(g));
    } else {
      ++c.disconnected;
    }
  }
  return c;
}

Corpus file_corpus(const std::string& path, GraphFormat format) {
  return corpus_from_graphs("file:" + path, read_graph_file(path, format));
}

Corpus random_corpus(int n, double p, std::uint64_t seed, int count) {
  if (count < 0) throw std::invalid_argument("random corpus count must be non-negative");
  std::vector<Graph> graphs;
  for (int i = 0; i < count; ++i) graphs.push_back(random_connected(n, p, seed + static_cast<std::uint64_t>(i)));
  return corpus_from_graphs("random:" + std::to_string(n) + ":" + std::to_string(p) + ":" + std::to_string(count),
                            std::move(graphs));
}

TheoremReport run_checks(std::string theorem_id, std::size_t count, const std::function<Outcome(std::size_t)>& check,
                         const std::function<std::string(std::size_t)>& graph6_of, Execution execution) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(count);
  std::vector<std::exception_ptr> errors(count);
  auto evaluate = [&](std::size_t i) {
    try {
      outcomes[i] = check(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const auto n = static_cast<long long>(count);
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) evaluate(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < n; ++i) evaluate(static_cast<std::size_t>(i));
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  TheoremReport r;
  r.theorem_id = std::move(theorem_id);
  r.corpus_size = count;
  for (std::size_t i = 0; i < count; ++i) {
    auto& o = outcomes[i];
    switch (o.kind) {
      case Kind::skipped: ++r.skipped; break;
      case Kind::excluded: ++r.excluded; break;
      case Kind::verified:
        ++r.verified;
        if (o.detail.contains("mode")) ++r.modes[o.detail["mode"].get<std::string>()];
        break;
      case Kind::timeout: ++r.timeouts; break;
      case Kind::violation: r.violations.push_back({graph6_of(i), std::move(o.detail)}); break;
    }
  }
  r.hypothesis_count = r.verified + r.violations.size() + r.timeouts;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

TheoremReport check_branch_bound(const Corpus& corpus, const CheckOptions& opt) {
  return over_corpus("lemma3", corpus, opt);
}
TheoremReport check_cycle_cover_bound(const Corpus& corpus, const CheckOptions& opt) {
  return over_corpus("lemma5", corpus, opt);
}
TheoremReport check_low_branch_construction(const Corpus& corpus, const CheckOptions& opt) {
  return over_corpus("theorem1", corpus, opt);
}
TheoremReport check_quadratic_independence(const Corpus& corpus, const CheckOptions& opt) {
  return over_corpus("corollary", corpus, opt);
}
TheoremReport check_bounded_3tree_construction(const Corpus& corpus, const CheckOptions& opt) {
  return over_corpus("theorem3", corpus, opt);
}

TheoremReport refute_disjoint_path_bound(int m_lo, int m_hi, const CheckOptions& opt) {
  require_range(m_lo, m_hi);
  if (m_hi > kMaxBipartiteParameter) {
    throw std::invalid_argument("m must be at most " + std::to_string(kMaxBipartiteParameter));
  }
  std::vector<Graph> graphs;
  for (int m = m_lo; m <= m_hi; ++m) graphs.push_back(path_cover_counterexample(m).graph);
  auto r = run_checks(
      "lemma4", graphs.size(), [&](std::size_t i) { return disjoint_path_kernel(graphs[i], opt.budget); },
      [&](std::size_t i) { return emit_graph6(graphs[i]); }, opt.execution);
  r.status = "refutation";
  return r;
}

TheoremReport check_no_sgc_construction(int m_lo, int m_hi, const CheckOptions& opt) {
  require_range(m_lo, m_hi);
  auto r = run_checks(
      "theorem2", static_cast<std::size_t>(m_hi - m_lo + 1),
      [&](std::size_t i) { return no_sgc_kernel(m_lo + static_cast<int>(i), opt.budget); },
      [&](std::size_t i) { return graph6_or_empty(no_sgc_family(m_lo + static_cast<int>(i)).graph); },
      opt.execution);
  return r;
}

bool is_corpus_check(std::string_view id) {
  return std::find(std::begin(kCorpusCheckIds), std::end(kCorpusCheckIds), id) != std::end(kCorpusCheckIds);
}

bool is_range_check(std::string_view id) {
  return std::find(std::begin(kRangeCheckIds), std::end(kRangeCheckIds), id) != std::end(kRangeCheckIds);
}

TheoremReport run_corpus_check(std::string_view id, const Corpus& corpus, const CheckOptions& opt) {
  return over_corpus(id, corpus, opt);
}

TheoremReport run_range_check(std::string_view id, int m_lo, int m_hi, const CheckOptions& opt) {
  if (id == "lemma4") return refute_disjoint_path_bound(m_lo, m_hi, opt);
  if (id == "theorem2") return check_no_sgc_construction(m_lo, m_hi, opt);
  throw std::invalid_argument("unknown range check: " + std::string(id));
}

bool replay_violation(std::string_view id, const Violation& v, const Budget& budget) {
  Outcome o;
  if (id == "theorem2") {
    o = no_sgc_kernel(v.detail.at("m").get<int>(), budget);
  } else if (id == "lemma4") {
    o = disjoint_path_kernel(parse_graph6(v.graph6), budget);
  } else {
    o = corpus_check(id).kernel(parse_graph6(v.graph6), budget);
  }
  return o.kind == Kind::violation;
}

Json to_json(const TheoremReport& r, bool with_timing) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
  Json j = {{"theorem_id", r.theorem_id},
            {"status", r.status},
            {"corpus_size", r.corpus_size},
            {"skipped", r.skipped},
            {"excluded", r.excluded},
            {"hypothesis_count", r.hypothesis_count},
            {"verified", r.verified},
            {"violations", std::move(violations)},
            {"timeouts", r.timeouts}};
  if (!r.modes.empty()) j["verified_by_mode"] = r.modes;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace sgc
