#include <benchmark/benchmark.h>

#include "annular/bijections.hpp"
#include "annular/counting.hpp"
#include "annular/enumeration.hpp"
#include "annular/tables.hpp"

using namespace annular;

static void BM_CountMaximal(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_maximal(n, n));
}
BENCHMARK(BM_CountMaximal)->Arg(10)->Arg(100)->Arg(1000);

static void BM_CountAnn(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_ann(a, a));
}
BENCHMARK(BM_CountAnn)->Arg(12)->Arg(60)->Arg(200);

static void BM_AnnTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ann_table(12, 1));
}
BENCHMARK(BM_AnnTable);

static void BM_OracleCount(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t half = (12 - k) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count(half, half, k, {}, 1));
}
BENCHMARK(BM_OracleCount)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_StateOracleCount(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t half = (12 - k) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(state_oracle_count(half, half, k));
}
BENCHMARK(BM_StateOracleCount)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_GraphRoundTrip(benchmark::State& state) {
  const auto all = enumerate_matchings(3, 3, 4);
  for (auto _ : state) {
    for (const auto& m : all) benchmark::DoNotOptimize(from_graph(to_graph(m)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_GraphRoundTrip);

BENCHMARK_MAIN();
