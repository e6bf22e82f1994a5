#include <random>

#include "benchmark/benchmark.h"
#include "mapcount/algo_average.hpp"
#include "mapcount/algo_heavypath.hpp"
#include "mapcount/algo_treewalk.hpp"

namespace {

using namespace mapcount;

IntText random_text(Index n, Rank sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rank> ranks(static_cast<std::size_t>(n));
  for (auto& r : ranks) r = static_cast<Rank>(rng() % static_cast<std::uint64_t>(sigma));
  return IntText(std::move(ranks), Alphabet::of_size(sigma));
}

void BM_BuildIndex(benchmark::State& state) {
  IntText t = random_text(state.range(0), 4, 1);
  for (auto _ : state) {
    SuffixIndex idx = SuffixIndex::build(t);
    benchmark::DoNotOptimize(idx.sa().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildIndex)->Range(1 << 12, 1 << 17);

void BM_BuildTree(benchmark::State& state) {
  IntText t = random_text(state.range(0), 4, 2);
  SuffixIndex idx = SuffixIndex::build(t);
  for (auto _ : state) {
    SuffixTree tree = SuffixTree::build(t, idx);
    benchmark::DoNotOptimize(tree.node_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTree)->Range(1 << 12, 1 << 17);

void BM_LceForward(benchmark::State& state) {
  const Index n = 1 << 16;
  IntText t = random_text(n, 4, 3);
  SuffixIndex idx = SuffixIndex::build(t);
  std::mt19937_64 rng(4);
  for (auto _ : state) {
    const Index i = static_cast<Index>(rng() % n);
    const Index j = static_cast<Index>(rng() % n);
    benchmark::DoNotOptimize(idx.lce_forward(i, j));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LceForward);

void BM_ZeroMap(benchmark::State& state) {
  IntText t = random_text(state.range(0), 4, 5);
  SuffixIndex idx = SuffixIndex::build(t);
  for (auto _ : state) {
    auto counts = zero_map(idx, 32);
    benchmark::DoNotOptimize(counts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ZeroMap)->Range(1 << 12, 1 << 17);

void BM_Average(benchmark::State& state) {
  IntText t = random_text(state.range(0), 4, 6);
  for (auto _ : state) {
    auto res = run_average(t, 48);
    benchmark::DoNotOptimize(res.c1.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Average)->Range(1 << 12, 1 << 17);

void BM_Treewalk(benchmark::State& state) {
  IntText t = random_text(1 << 14, 4, 7);
  for (auto _ : state) {
    auto res = run_treewalk(t, state.range(0));
    benchmark::DoNotOptimize(res.c1.data());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 14));
}
BENCHMARK(BM_Treewalk)->RangeMultiplier(4)->Range(16, 256);

void BM_Heavypath(benchmark::State& state) {
  IntText t = random_text(1 << 14, 4, 8);
  for (auto _ : state) {
    auto res = run_heavypath(t, state.range(0));
    benchmark::DoNotOptimize(res.c1.data());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 14));
}
BENCHMARK(BM_Heavypath)->RangeMultiplier(4)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
