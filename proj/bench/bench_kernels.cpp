// Serial reference loops against their OpenMP counterparts. The second
// argument selects the execution mode: 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "autz/kernels.hpp"
#include "autz/verify.hpp"

using namespace autz;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_BraidSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_braid_solutions(state.range(0), mode(state)));
}
BENCHMARK(BM_BraidSearch)->ArgsProduct({{25, 50}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SquareRootSearch(benchmark::State& state) {
  const IntMatrix t{{1, 2}, {0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(search_sl2_square_roots(t, state.range(0), mode(state)));
}
BENCHMARK(BM_SquareRootSearch)->ArgsProduct({{50, 100}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SignMaskCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commuting_extremal_sign_masks(n, mode(state)));
}
BENCHMARK(BM_SignMaskCensus)->ArgsProduct({{6, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_LiftCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_lift_census(n, mode(state)));
}
BENCHMARK(BM_LiftCensus)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SuiteL1_7(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(SuiteId::L1_7, n, 200, 42, mode(state)));
}
BENCHMARK(BM_SuiteL1_7)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
