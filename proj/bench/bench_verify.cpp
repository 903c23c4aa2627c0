// Serial reference against the OpenMP runner on the same corpus checks.

#include <benchmark/benchmark.h>

#include <string>

#include "sgc/verify.hpp"

namespace {

const sgc::Corpus& corpus() {
  static const sgc::Corpus c = sgc::embedded_corpus(6);
  return c;
}

void run_check(benchmark::State& state, const char* id, sgc::Execution execution) {
  const sgc::CheckOptions opt{.execution = execution};
  for (auto _ : state) {
    auto report = sgc::run_corpus_check(id, corpus(), opt);
    benchmark::DoNotOptimize(report.verified);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(corpus().graphs.size()));
}

void register_all() {
  for (auto id : sgc::kCorpusCheckIds) {
    const std::string name(id);
    for (auto [label, mode] : {std::pair{"serial", sgc::Execution::serial}, std::pair{"parallel", sgc::Execution::parallel}}) {
      benchmark::RegisterBenchmark((name + "/" + label).c_str(), [id, mode = mode](benchmark::State& s) {
        run_check(s, std::string(id).c_str(), mode);
      })->Unit(benchmark::kMillisecond);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  register_all();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
