// Microbenchmarks for the matching layer: maximum matching and the complete
// matching early exits on random bipartite graphs of growing size.

#include <benchmark/benchmark.h>

#include "tsim/bipartite.hpp"
#include "tsim/generator.hpp"

namespace {

tsim::BipartiteGraph make_graph(int side, int edges_per_left, std::uint64_t seed) {
  tsim::Rng rng(seed);
  tsim::BipartiteGraph bg;
  for (int i = 0; i < side; ++i) bg.add_left("x" + std::to_string(i));
  for (int j = 0; j < side; ++j) bg.ensure_right("y" + std::to_string(j));
  for (int i = 0; i < side; ++i)
    for (int k = 0; k < edges_per_left; ++k) bg.add_edge(i, rng.below(side));
  return bg;
}

void BM_maximum_matching(benchmark::State& state) {
  tsim::BipartiteGraph bg = make_graph(static_cast<int>(state.range(0)), 4, 42);
  for (auto _ : state) {
    tsim::Matching m = tsim::maximum_matching(bg);
    benchmark::DoNotOptimize(m.pairs.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_has_complete_matching(benchmark::State& state) {
  tsim::BipartiteGraph bg = make_graph(static_cast<int>(state.range(0)), 4, 43);
  for (auto _ : state) {
    bool complete = tsim::has_complete_matching(bg);
    benchmark::DoNotOptimize(complete);
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_maximum_matching)->Range(16, 4096)->Complexity();
BENCHMARK(BM_has_complete_matching)->Range(16, 4096)->Complexity();

BENCHMARK_MAIN();
