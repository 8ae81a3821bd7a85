// Parallel kernels against their serial references. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "ca/finite_field.hpp"
#include "ca/sylvester.hpp"

namespace {

void BM_DeterminantParallel(benchmark::State& state) {
  ca::PolyMatrix m = ca::caMatrix(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ca::determinant(m));
}

void BM_DeterminantSerial(benchmark::State& state) {
  ca::PolyMatrix m = ca::caMatrix(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ca::determinantSerial(m));
}

void BM_DeterminantBareiss(benchmark::State& state) {
  ca::PolyMatrix m = ca::caMatrix(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ca::determinantBareiss(m));
}

void BM_SearchParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ca::exhaustiveSearch(state.range(0), state.range(1)));
}

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ca::exhaustiveSearchSerial(state.range(0), state.range(1)));
}

void determinantArgs(benchmark::internal::Benchmark* b) {
  for (int d : {6, 7, 8}) b->Args({d, 1})->Args({d, d / 2});
  b->Unit(benchmark::kMillisecond);
}

void searchArgs(benchmark::internal::Benchmark* b) {
  b->Args({5, 7})->Args({6, 5})->Args({7, 5})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_DeterminantParallel)->Apply(determinantArgs);
BENCHMARK(BM_DeterminantSerial)->Apply(determinantArgs);
BENCHMARK(BM_DeterminantBareiss)->Args({6, 1})->Args({7, 1})->Args({7, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Apply(searchArgs);
BENCHMARK(BM_SearchSerial)->Apply(searchArgs);

BENCHMARK_MAIN();
