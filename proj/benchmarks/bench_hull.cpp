#include <convexiq/body.hpp>
#include <convexiq/coord_ops.hpp>
#include <convexiq/corpus.hpp>

#include <benchmark/benchmark.h>

using namespace convexiq;

static void BM_ConvexHull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int count = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  PointList pts;
  for (int k = 0; k < count; ++k) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = g(rng);
    pts.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->Args({3, 50})->Args({3, 500})->Args({4, 50})->Args({5, 30})->Args({6, 20});

static void BM_Section(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto p = random_polytope(static_cast<int>(state.range(0)), 20, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(section(p, {1}));
}
BENCHMARK(BM_Section)->Arg(3)->Arg(4)->Arg(5);

static void BM_GSymmetral(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto p = random_polytope(3, static_cast<int>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(g_symmetral(p));
}
BENCHMARK(BM_GSymmetral)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
