// Serial reference vs OpenMP kernel for each parallel code path.
//
//   ./bench_kernels --benchmark_filter=Census

#include <benchmark/benchmark.h>

#include <cmath>

#include "ternary/asymptotics.hpp"
#include "ternary/constructions.hpp"
#include "ternary/counting.hpp"
#include "ternary/search.hpp"

using namespace ternary;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_PairCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pair_distance_census(6, mode(state)));
  label(state);
}
BENCHMARK(BM_PairCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ShellCensus(benchmark::State& state) {
  const TernaryWord centre{1, -1, 1, 0, 0, 1, -1, 0, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(shell_distance_census(centre, mode(state)));
  label(state);
}
BENCHMARK(BM_ShellCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CliqueSearch(benchmark::State& state) {
  SearchOptions options;
  options.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(exact_T(5, 4, options));
  label(state);
}
BENCHMARK(BM_CliqueSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PhiShiftScan(benchmark::State& state) {
  const auto b = binary_lexicode(16, 4);
  for (auto _ : state) benchmark::DoNotOptimize(best_phi_shift(b, PhiShiftStrategy::exhaustive(), mode(state)));
  label(state);
}
BENCHMARK(BM_PhiShiftScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CosetScan(benchmark::State& state) {
  const auto outer = binary_lexicode(14, 4);
  const auto inner = lexicode_inner_codes(14, 4);
  for (auto _ : state) benchmark::DoNotOptimize(coset_scan_construction(outer, inner, 4, mode(state)));
  label(state);
}
BENCHMARK(BM_CosetScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CurveExport(benchmark::State& state) {
  const asymptotic::DeltaGrid grid{0.001, 0.999, 0.001};
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic::curve_export(grid, mode(state)));
  label(state);
}
BENCHMARK(BM_CurveExport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GridMax(benchmark::State& state) {
  const auto f = [](double w) { return asymptotic::coset_objective(0.3, w); };
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic::grid_max(f, 0.5, 1.0, 1'000'000, mode(state)));
  label(state);
}
BENCHMARK(BM_GridMax)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
