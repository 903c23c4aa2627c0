#include "cli.hpp"

#include <CLI11.hpp>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgc/constructive.hpp"
#include "sgc/cover.hpp"
#include "sgc/families.hpp"
#include "sgc/generators.hpp"
#include "sgc/graph_io.hpp"
#include "sgc/invariants.hpp"
#include "sgc/serialize.hpp"
#include "sgc/spanning.hpp"
#include "sgc/verify.hpp"

namespace sgc::cli {

namespace {

/// Invalid flag combinations or values detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonConfig {
  std::string input = "-";
  std::string format = "graph6";
  std::string out;
  std::string output = "json";
  long long budget_ms = 10'000;
  long long budget_nodes = 10'000'000;
  std::uint64_t seed = 0;

  Budget budget() const {
    return {static_cast<std::uint64_t>(budget_nodes), std::chrono::milliseconds(budget_ms)};
  }
  GraphFormat graph_format() const { return format == "edgelist" ? GraphFormat::edgelist : GraphFormat::graph6; }
  bool text() const { return output == "text"; }
};

void add_common(CLI::App& sub, CommonConfig& c, bool with_input) {
  if (with_input) sub.add_option("--input", c.input, "Graph file, '-' for stdin")->capture_default_str();
  sub.add_option("--format", c.format, "Graph encoding")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  sub.add_option("--out", c.out, "Write output to this file instead of stdout");
  sub.add_option("--output", c.output, "Report style")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  sub.add_option("--budget-ms", c.budget_ms, "Time budget per solver call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--budget-nodes", c.budget_nodes, "Search-node budget per solver call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--seed", c.seed, "Seed for every randomized step")->capture_default_str();
}

std::vector<Graph> load_graphs(const CommonConfig& c) {
  if (c.input == "-") return read_graphs(std::cin, c.graph_format());
  std::ifstream in(c.input);
  if (!in) throw std::runtime_error("cannot open input file: " + c.input);
  return read_graphs(in, c.graph_format());
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_text(std::ostream& os, const Json& j) {
  for (const auto& [key, value] : j.items()) os << key << ": " << scalar_text(value) << '\n';
}

/// Emits a JSON document (one line) or its text rendering.
void emit(std::ostream& os, const CommonConfig& c, const Json& j, bool separator = false) {
  if (c.text()) {
    if (separator) os << '\n';
    write_text(os, j);
  } else {
    os << j.dump() << '\n';
  }
}

Json analyze_graph(const Graph& g, const Budget& budget, std::optional<int> k) {
  Json j;
  j["graph6"] = g.order() <= 62 ? Json(emit_graph6(g)) : Json(nullptr);
  j["n"] = g.order();
  j["m"] = g.size();
  const bool connected = is_connected(g);
  j["connected"] = connected;
  auto parts = bipartition(g);
  j["bipartite"] = parts.has_value();
  j["bipartition"] = parts ? to_json(*parts) : Json(nullptr);

  auto alpha = independence_number(g, budget);
  j["alpha"] = alpha.exhaustive ? Json(alpha.alpha) : Json("unknown");
  j["alpha_lower_bound"] = alpha.alpha;
  j["alpha_exact"] = alpha.exhaustive;
  j["independent_set"] = alpha.witness;

  auto kappa = vertex_connectivity(g);
  j["kappa"] = kappa.kappa;
  j["separator"] = kappa.separator ? Json(*kappa.separator) : Json(nullptr);
  j["complete"] = kappa.complete;

  if (connected) {
    auto mb = min_branch_spanning_tree(g, budget);
    j["s"] = mb.exact ? Json(mb.branch_count) : Json("unknown");
    j["s_upper_bound"] = mb.branch_count;
    j["s_exact"] = mb.exact;
    j["min_branch_tree"] = to_json(mb.witness);
    auto sgc = decide_sgc(g, budget);
    j["sgc"] = to_string(sgc.verdict);
    j["sgc_certificate"] = sgc.certificate ? to_json(*sgc.certificate) : Json(nullptr);
  } else {
    // No spanning tree at all.
    j["s"] = nullptr;
    j["s_upper_bound"] = nullptr;
    j["s_exact"] = true;
    j["min_branch_tree"] = nullptr;
    j["sgc"] = "no";
    j["sgc_certificate"] = nullptr;
  }

  if (k) {
    auto pc = disjoint_path_cover(g, *k, budget);
    j["path_cover_k"] = {{"k", *k},
                         {"verdict", to_string(pc.verdict)},
                         {"cover", pc.cover ? to_json(*pc.cover) : Json(nullptr)}};
    if (g.order() <= kMaxCycleCoverOrder) {
      auto cc = cycle_cover(g, *k, budget);
      j["cycle_cover_k"] = {{"k", *k},
                            {"verdict", to_string(cc.verdict)},
                            {"cover", cc.cover ? to_json(*cc.cover) : Json(nullptr)}};
    }
  }
  return j;
}

std::pair<int, int> parse_m_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--m-range must look like a..b");
  try {
    std::size_t used_a = 0, used_b = 0;
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used_a), hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw UsageError("--m-range must look like a..b");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--m-range must look like a..b");
  }
}

Corpus load_corpus(const std::string& source, int max_n, const CommonConfig& c) {
  if (source == "embedded") return embedded_corpus(max_n);
  if (source.rfind("random:", 0) == 0) {
    std::stringstream ss(source.substr(7));
    std::string n, p, count;
    if (!std::getline(ss, n, ':') || !std::getline(ss, p, ':') || !std::getline(ss, count)) {
      throw UsageError("random corpus must look like random:N:P:COUNT");
    }
    return random_corpus(std::stoi(n), std::stod(p), c.seed, std::stoi(count));
  }
  return file_corpus(source, c.graph_format());
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Spanning generalized caterpillars: solvers, constructions and verification"};
    app.name("sgc");
    app.require_subcommand(1);

    CommonConfig analyze_cfg, generate_cfg, construct_cfg, verify_cfg;
    std::optional<int> k;
    auto* analyze = app.add_subcommand("analyze", "Invariants, s(G) and SGC decision for each input graph");
    add_common(*analyze, analyze_cfg, true);
    analyze->add_option("--k", k, "Also decide path and cycle covers with k members")->check(CLI::PositiveNumber);

    std::string family;
    int m = 1, a = 1, b = 1, n = 0;
    double p = 0.5;
    auto* generate = app.add_subcommand("generate", "Write a named graph family");
    add_common(*generate, generate_cfg, false);
    generate->add_option("family", family, "t2, kmn, path, cycle, complete, wheel or random-connected")
        ->required()
        ->check(CLI::IsMember({"t2", "kmn", "path", "cycle", "complete", "wheel", "random-connected"}));
    generate->add_option("--m", m, "Family parameter for t2")->check(CLI::PositiveNumber);
    generate->add_option("--a", a, "First side of K_{a,b}")->check(CLI::PositiveNumber);
    generate->add_option("--b", b, "Second side of K_{a,b}")->check(CLI::PositiveNumber);
    generate->add_option("--n,--n-param", n, "Order (rim size for wheel)")->check(CLI::PositiveNumber);
    generate->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));

    std::string construct_id;
    auto* construct = app.add_subcommand("construct", "Build a spanning generalized caterpillar certificate");
    add_common(*construct, construct_cfg, true);
    construct->add_option("theorem", construct_id, "theorem1 (s <= kappa) or theorem3 (alpha <= 2 kappa + 1)")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem3"}));

    std::string verify_id, corpus = "embedded", m_range;
    std::optional<int> verify_m;
    int max_n = 6;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "Run a claim check over a corpus or parameter range");
    add_common(*verify, verify_cfg, false);
    std::vector<std::string> ids(std::begin(kCorpusCheckIds), std::end(kCorpusCheckIds));
    ids.insert(ids.end(), std::begin(kRangeCheckIds), std::end(kRangeCheckIds));
    verify->add_option("theorem", verify_id, "Claim id")->required()->check(CLI::IsMember(ids));
    verify->add_option("--corpus", corpus, "embedded, a graph file, or random:N:P:COUNT")->capture_default_str();
    verify->add_option("--max-n", max_n, "Largest order in the embedded corpus")->capture_default_str();
    verify->add_option("--m", verify_m, "Single family parameter")->check(CLI::PositiveNumber);
    verify->add_option("--m-range", m_range, "Family parameters a..b");
    verify->add_flag("--serial", serial, "Check graphs one at a time");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kSuccess : kOperationalError;
    }

    try {
      if (*analyze) return run_analyze(analyze_cfg, k);
      if (*generate) return run_generate(generate_cfg, family, m, a, b, n, p);
      if (*construct) return run_construct(construct_cfg, construct_id);
      CheckOptions opt{verify_cfg.budget(), serial ? Execution::serial : Execution::parallel};
      return run_verify(verify_cfg, verify_id, corpus, max_n, verify_m, m_range, opt);
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kOperationalError;
    }
  }

 private:
  // Routes output to --out when given.
  template <class F>
  int with_output(const CommonConfig& c, F&& body) {
    if (c.out.empty()) return body(out_);
    std::ofstream file(c.out);
    if (!file) throw std::runtime_error("cannot open output file: " + c.out);
    return body(file);
  }

  int run_analyze(const CommonConfig& c, std::optional<int> k) {
    const auto graphs = load_graphs(c);
    const Budget budget = c.budget();
    std::vector<Json> results(graphs.size());
    std::vector<std::exception_ptr> errors(graphs.size());
    const auto count = static_cast<long long>(graphs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      try {
        results[idx] = analyze_graph(graphs[idx], budget, k);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return with_output(c, [&](std::ostream& os) {
      for (std::size_t i = 0; i < results.size(); ++i) emit(os, c, results[i], i > 0);
      return kSuccess;
    });
  }

  int run_generate(const CommonConfig& c, const std::string& family, int m, int a, int b, int n, double p) {
    auto need_n = [&] {
      if (n < 1) throw UsageError(family + " needs --n");
      return n;
    };
    Graph g;
    if (family == "t2") {
      g = no_sgc_family(m).graph;
    } else if (family == "kmn") {
      g = complete_bipartite(a, b).graph;
    } else if (family == "path") {
      g = path_graph(need_n());
    } else if (family == "cycle") {
      g = cycle_graph(need_n());
    } else if (family == "complete") {
      g = complete_graph(need_n());
    } else if (family == "wheel") {
      g = wheel_graph(need_n());
    } else {
      g = random_connected(need_n(), p, c.seed);
    }
    return with_output(c, [&](std::ostream& os) {
      os << (c.graph_format() == GraphFormat::edgelist ? emit_edgelist(g) : emit_graph6(g) + "\n");
      return kSuccess;
    });
  }

  int run_construct(const CommonConfig& c, const std::string& id) {
    const auto graphs = load_graphs(c);
    if (graphs.empty()) throw std::runtime_error("no graph in input");
    const Budget budget = c.budget();
    int code = kSuccess;
    std::vector<Json> results;
    for (const auto& g : graphs) {
      Json j{{"theorem", id}, {"graph6", g.order() <= 62 ? Json(emit_graph6(g)) : Json(nullptr)}};
      Construction built;
      if (!is_connected(g)) {
        built.status = ConstructionStatus::hypothesis_failed;
        built.reason = "graph is disconnected";
      } else {
        built = id == "theorem1" ? construct_sgc_low_branch(g, budget) : construct_sgc_bounded_3tree(g, budget);
      }
      j["status"] = to_string(built.status);
      j["kappa"] = vertex_connectivity(g).kappa;
      if (built.certificate) {
        j["certificate"] = to_json(*built.certificate);
        j["base_tree"] = to_json(*built.base_tree);
      } else {
        j["reason"] = built.reason;
      }
      if (built.status == ConstructionStatus::budget_exhausted) {
        code = kBudgetExhausted;
      } else if (built.status == ConstructionStatus::hypothesis_failed && code == kSuccess) {
        code = kHypothesisRejected;
      }
      results.push_back(std::move(j));
    }
    return with_output(c, [&](std::ostream& os) {
      for (std::size_t i = 0; i < results.size(); ++i) emit(os, c, results[i], i > 0);
      return code;
    });
  }

  int run_verify(const CommonConfig& c, const std::string& id, const std::string& corpus_source, int max_n,
                 std::optional<int> m, const std::string& m_range, const CheckOptions& opt) {
    TheoremReport report;
    if (is_range_check(id)) {
      if (m && !m_range.empty()) throw UsageError("give either --m or --m-range, not both");
      auto [lo, hi] = m ? std::pair{*m, *m}
                        : !m_range.empty() ? parse_m_range(m_range)
                                           : (id == "lemma4" ? std::pair{1, 6} : std::pair{1, 1});
      report = run_range_check(id, lo, hi, opt);
    } else {
      report = run_corpus_check(id, load_corpus(corpus_source, max_n, c), opt);
    }
    return with_output(c, [&](std::ostream& os) {
      emit(os, c, to_json(report));
      return kSuccess;
    });
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace sgc::cli
