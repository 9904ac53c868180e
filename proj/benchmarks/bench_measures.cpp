#include <convexiq/corpus.hpp>
#include <convexiq/measures.hpp>

#include <benchmark/benchmark.h>

using namespace convexiq;

static void BM_V1Exact(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto p = random_polytope(3, static_cast<int>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(v1_polytope_exact(p));
}
BENCHMARK(BM_V1Exact)->Arg(10)->Arg(100);

static void BM_V1Quadrature(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int n = static_cast<int>(state.range(0));
  const auto p = random_polytope(n, 2 * n + 4, 1.0, rng);
  QuadratureSpec q;
  q.resolution = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(v1_quadrature(p, q));
}
BENCHMARK(BM_V1Quadrature)->Args({3, 128})->Args({3, 512})->Args({4, 32})->Args({4, 64})->Unit(benchmark::kMillisecond);

static void BM_ZonotopeVm(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const int n = static_cast<int>(state.range(0));
  const auto z = random_zonotope(n, static_cast<int>(state.range(1)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(vm_zonotope(z, n / 2));
}
BENCHMARK(BM_ZonotopeVm)->Args({4, 8})->Args({6, 12})->Args({8, 16});

static void BM_RidgeFormula(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int n = static_cast<int>(state.range(0));
  const auto p = random_polytope(n, 3 * n, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(vm_polytope(p, n - 2));
}
BENCHMARK(BM_RidgeFormula)->Arg(4)->Arg(5);
