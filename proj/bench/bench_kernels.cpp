// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "catnum/kernels.hpp"

namespace k = catnum::kernels;

namespace {

void BM_SuccessorCostSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::successor_cost_serial(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SuccessorCostParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::successor_cost_parallel(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_DualCensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::dual_census_serial(0, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DualCensusParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::dual_census_parallel(0, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

const std::vector<k::OperandPair>& sweep_pairs() {
  static const std::vector<k::OperandPair> pairs = [] {
    auto v = k::grid_pairs(64);
    const auto r = k::random_pairs(2000, 256, 1);
    v.insert(v.end(), r.begin(), r.end());
    return v;
  }();
  return pairs;
}

void BM_OracleSweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::oracle_sweep_serial(sweep_pairs()));
  state.SetItemsProcessed(state.iterations() * sweep_pairs().size());
}

void BM_OracleSweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::oracle_sweep_parallel(sweep_pairs()));
  state.SetItemsProcessed(state.iterations() * sweep_pairs().size());
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_SuccessorCostSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuccessorCostParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DualCensusSerial)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualCensusParallel)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
