#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "sgc/families.hpp"
#include "sgc/generators.hpp"
#include "sgc/graph_io.hpp"

using namespace sgc;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sgc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Writes `text` to a scratch file that is removed when the fixture dies.
struct Fixture {
  explicit Fixture(const std::string& text, std::string name = "cli_fixture.txt") : path(std::move(name)) {
    std::ofstream(path) << text;
  }
  ~Fixture() { std::remove(path.c_str()); }
  std::string path;
};

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("analyze reports invariants and decisions") {
  Fixture input(emit_graph6(complete_bipartite(2, 4).graph) + "\n" + emit_graph6(path_graph(5)) + "\n" +
                emit_graph6(no_sgc_family(1).graph) + "\n");
  auto r = invoke({"analyze", "--input", input.path});
  REQUIRE(r.code == 0);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0]["alpha"] == 4);
  CHECK(lines[0]["kappa"] == 2);
  CHECK(lines[0]["s"] == 1);
  CHECK(lines[0]["sgc"] == "yes");
  CHECK(lines[1]["alpha"] == 3);
  CHECK(lines[1]["kappa"] == 1);
  CHECK(lines[1]["s"] == 0);
  CHECK(lines[2]["alpha"] == 9);
  CHECK(lines[2]["kappa"] == 1);
  CHECK(lines[2]["sgc"] == "no");
}

TEST_CASE("analyze marks unresolved fields unknown and still succeeds") {
  Fixture input(emit_graph6(no_sgc_family(2).graph) + "\n");
  auto r = invoke({"analyze", "--input", input.path, "--budget-nodes", "20"});
  REQUIRE(r.code == 0);
  auto j = json_lines(r.out).at(0);
  CHECK(j["sgc"] == "unknown");
  CHECK(j["s"] == "unknown");
}

TEST_CASE("analyze text output and cover queries") {
  Fixture input("6 8\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n");
  auto r = invoke({"analyze", "--input", input.path, "--format", "edgelist", "--output", "text", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("alpha: 4\n") != std::string::npos);
  CHECK(r.out.find("path_cover_k: ") != std::string::npos);
  CHECK(r.out.find("\"verdict\":\"yes\"") != std::string::npos);
}

TEST_CASE("malformed input is an operational error with a line number") {
  Fixture input("Bw\nA_\n!!\n");
  auto r = invoke({"analyze", "--input", input.path});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(invoke({"analyze", "--input", "does-not-exist.g6"}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"analyze", "--budget-nodes", "0"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("generate families") {
  auto t2 = invoke({"generate", "t2", "--m", "1"});
  REQUIRE(t2.code == 0);
  CHECK(parse_graph6(t2.out.substr(0, t2.out.size() - 1)).order() == 13);

  auto kmn = invoke({"generate", "kmn", "--a", "6", "--b", "12"});
  CHECK(parse_graph6(kmn.out.substr(0, kmn.out.size() - 1)) == complete_bipartite(6, 12).graph);

  auto r1 = invoke({"generate", "random-connected", "--n", "8", "--p", "0.4", "--seed", "7"});
  auto r2 = invoke({"generate", "random-connected", "--n", "8", "--p", "0.4", "--seed", "7"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  auto edges = invoke({"generate", "cycle", "--n-param", "4", "--format", "edgelist"});
  CHECK(edges.out == "4 4\n0 1\n0 3\n1 2\n2 3\n");

  CHECK(invoke({"generate", "petersen"}).code == 1);
  CHECK(invoke({"generate", "path"}).code == 1);
  CHECK(invoke({"generate", "t2", "--m", "0"}).code == 1);
}

TEST_CASE("construct exit codes") {
  Fixture wheel(emit_graph6(wheel_graph(5)) + "\n", "cli_wheel.g6");
  auto ok = invoke({"construct", "theorem1", "--input", wheel.path});
  CHECK(ok.code == 0);
  auto j = json_lines(ok.out).at(0);
  CHECK(j["status"] == "certificate");
  CHECK(j["certificate"].contains("spine"));

  Fixture k36(emit_graph6(complete_bipartite(3, 6).graph) + "\n", "cli_k36.g6");
  CHECK(invoke({"construct", "theorem1", "--input", k36.path}).code == 0);

  Fixture fam(emit_graph6(no_sgc_family(1).graph) + "\n", "cli_fam.g6");
  auto rejected = invoke({"construct", "theorem3", "--input", fam.path});
  CHECK(rejected.code == 2);
  CHECK(json_lines(rejected.out).at(0)["status"] == "hypothesis_failed");
  CHECK(invoke({"construct", "theorem1", "--input", fam.path}).code == 2);

  Fixture big(emit_graph6(no_sgc_family(2).graph) + "\n", "cli_big.g6");
  CHECK(invoke({"construct", "theorem1", "--input", big.path, "--budget-nodes", "10"}).code == 3);
}

TEST_CASE("verify subcommand") {
  auto lemma4 = invoke({"verify", "lemma4", "--m-range", "1..6"});
  REQUIRE(lemma4.code == 0);
  auto r = json::parse(lemma4.out);
  CHECK(r["violations"].size() == 4);
  CHECK(r["verified"] == 2);

  auto t1 = json::parse(invoke({"verify", "theorem1", "--corpus", "embedded", "--max-n", "5"}).out);
  CHECK(t1["verified"] == t1["hypothesis_count"]);
  CHECK(t1["violations"].empty());

  auto t2 = json::parse(invoke({"verify", "theorem2", "--m", "1"}).out);
  CHECK(t2["verified"] == 1);

  auto rnd = invoke({"verify", "theorem3", "--corpus", "random:8:0.5:6", "--seed", "3", "--serial"});
  CHECK(rnd.code == 0);
  CHECK(json::parse(rnd.out)["corpus_size"] == 6);

  CHECK(invoke({"verify", "lemma7"}).code == 1);
  CHECK(invoke({"verify", "lemma4", "--m-range", "3-5"}).code == 1);
  CHECK(invoke({"verify", "lemma5", "--corpus", "missing-file.g6"}).code == 1);
}

TEST_CASE("output file option") {
  const std::string path = "cli_out.json";
  auto r = invoke({"verify", "theorem2", "--m", "1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["theorem_id"] == "theorem2");
  std::remove(path.c_str());
}
