// End-to-end benchmarks: dual and triple simulation over synthetic data
// graphs of growing size, with a fixed 6-node pattern per run.

#include <benchmark/benchmark.h>

#include "tsim/generator.hpp"
#include "tsim/graph.hpp"
#include "tsim/simulation.hpp"
#include "tsim/triple.hpp"

namespace {

constexpr std::uint64_t kPatternSeed = 1;

tsim::PatternGraph make_pattern() {
  tsim::Rng rng(kPatternSeed);
  return tsim::random_pattern(rng, 6, 2, 2);
}

tsim::Graph make_data(int nodes) {
  tsim::Rng rng(kPatternSeed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(nodes));
  return tsim::random_data_graph(rng, nodes, 2, 6.0);
}

void BM_dual_simulation(benchmark::State& state) {
  tsim::PatternGraph q = make_pattern();
  tsim::Graph g = make_data(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rel = tsim::dual_simulation(q, g);
    benchmark::DoNotOptimize(rel);
  }
  state.SetComplexityN(state.range(0));
}

void BM_triple_simulation(benchmark::State& state) {
  tsim::PatternGraph q = make_pattern();
  tsim::Graph g = make_data(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto match = tsim::triple_simulation(q, g);
    benchmark::DoNotOptimize(match);
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_dual_simulation)->Range(256, 8192)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_triple_simulation)->Range(256, 8192)->Complexity()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
