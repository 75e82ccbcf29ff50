#include <benchmark/benchmark.h>

#include <omp.h>

#include "lqnash/oracle.hpp"
#include "lqnash/sweep.hpp"

namespace {

using namespace lqnash;

SweepConfig figure_config(int count) {
  SweepConfig c;
  c.q1 = BigRational(1, 2);
  c.a_grid.min = BigRational(1, 10000);
  c.a_grid.max = 4;
  c.a_grid.count = count;
  c.r2_values = {BigRational(3, 4), BigRational(1), BigRational(3, 2), BigRational(4)};
  return c;
}

// Three equilibria, so the scan does real refinement work.
NormalizedGame three_equilibria() { return canonical_game(BigRational(39, 10), BigRational(1, 2), 1, 1, 1); }

void BM_SweepSerial(benchmark::State& state) {
  const SweepConfig c = figure_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepConfig c = figure_config(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}

void BM_GridScanSerial(benchmark::State& state) {
  const NormalizedGame g = three_equilibria();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grid_scan_serial(g, n));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_GridScanParallel(benchmark::State& state) {
  const NormalizedGame g = three_equilibria();
  const int n = static_cast<int>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(grid_scan(g, n));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{100}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridScanSerial)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridScanParallel)->ArgsProduct({{512, 1024}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
