#include <benchmark/benchmark.h>

#include "mmk/classification.hpp"
#include "mmk/fusion.hpp"
#include "mmk/invariants.hpp"

namespace {

void BM_CommutantBasisSu2(benchmark::State& state) {
  const auto d = mmk::su2_data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mmk::commutant_basis(d));
}
BENCHMARK(BM_CommutantBasisSu2)->Arg(10)->Arg(16)->Arg(28)->Unit(benchmark::kMicrosecond);

void BM_CommutantBasisMinimal(benchmark::State& state) {
  const auto d = mmk::minimal_data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mmk::commutant_basis(d));
}
BENCHMARK(BM_CommutantBasisMinimal)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnumerateSu2(benchmark::State& state) {
  const auto d = mmk::su2_data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mmk::enumerate_invariants(d, {1}));
}
BENCHMARK(BM_EnumerateSu2)->Arg(10)->Arg(16)->Arg(28)->Unit(benchmark::kMicrosecond);

void BM_EnumerateMinimal(benchmark::State& state) {
  const auto d = mmk::minimal_data(static_cast<int>(state.range(0)));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mmk::enumerate_invariants(d, {workers}));
}
BENCHMARK(BM_EnumerateMinimal)->Args({12, 1})->Args({12, 4})->Args({20, 1})->Args({20, 4})->Unit(benchmark::kMillisecond);

void BM_Verlinde(benchmark::State& state) {
  const auto d = mmk::minimal_data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mmk::verlinde(d));
}
BENCHMARK(BM_Verlinde)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ClassifyMinimal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mmk::classify_minimal(m));
}
BENCHMARK(BM_ClassifyMinimal)->Arg(11)->Arg(29)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
