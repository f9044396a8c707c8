#include <benchmark/benchmark.h>

#include "latseg/harness.hpp"

using namespace latseg;

static void BM_EnumerateSphere(benchmark::State& state) {
  const SphereSpec sphere(static_cast<int>(state.range(0)), state.range(1));
  std::size_t points = 0;
  for (auto _ : state) {
    const SpherePointSet pts = enumerate_sphere(sphere);
    points = pts.size();
    benchmark::DoNotOptimize(points);
  }
  state.counters["points"] = static_cast<double>(points);
}
BENCHMARK(BM_EnumerateSphere)->Args({3, 10000})->Args({3, 100000})->Args({4, 10000})->Args({5, 2000});

static void BM_CountSegmentRational(benchmark::State& state) {
  const SphereSpec sphere(3, state.range(0));
  const SpherePointSet pts = enumerate_sphere(sphere);
  const Segment seg(sphere, Direction::rational({1, 2, 3}), from_double(radius_from_angle(sphere, 0.6)),
                    from_double(radius_from_angle(sphere, 0.3)));
  for (auto _ : state) benchmark::DoNotOptimize(count_segment(seg, pts));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pts.size()));
}
BENCHMARK(BM_CountSegmentRational)->Arg(10000)->Arg(100000);

static void BM_CountSegmentReal(benchmark::State& state) {
  const SphereSpec sphere(3, state.range(0));
  const SpherePointSet pts = enumerate_sphere(sphere);
  const Segment seg(sphere, random_direction(3, 1), from_double(radius_from_angle(sphere, 0.6)),
                    from_double(radius_from_angle(sphere, 0.3)));
  for (auto _ : state) benchmark::DoNotOptimize(count_segment(seg, pts));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pts.size()));
}
BENCHMARK(BM_CountSegmentReal)->Arg(10000)->Arg(100000);

static void BM_Slice(benchmark::State& state) {
  const SpherePointSet pts = enumerate_sphere(SphereSpec(4, state.range(0)));
  const std::vector<std::int64_t> b{1, 2, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(slice(pts, b).max_count());
}
BENCHMARK(BM_Slice)->Arg(1000)->Arg(10000);

static void BM_Dirichlet(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Interval> xi;
  for (int i = 0; i < m; ++i) xi.push_back(sqrt(Interval(2 + 3 * i)));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_approx(xi, state.range(1)));
}
BENCHMARK(BM_Dirichlet)->Args({1, 1000})->Args({2, 64})->Args({3, 32})->Args({4, 16});

static void BM_ApproxDirection(benchmark::State& state) {
  const Direction beta = random_direction(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(approx_direction(beta, state.range(1)));
}
BENCHMARK(BM_ApproxDirection)->Args({3, 16})->Args({4, 16})->Args({5, 8});

static void BM_BoundPipeline(benchmark::State& state) {
  const SphereSpec sphere(3, state.range(0));
  const SpherePointSet pts = enumerate_sphere(sphere);
  const Segment seg(sphere, random_direction(3, 3), from_double(radius_from_angle(sphere, 0.1)), Rational(0));
  for (auto _ : state) benchmark::DoNotOptimize(bound_pipeline(seg, pts, PipelineMode::Generic));
}
BENCHMARK(BM_BoundPipeline)->Arg(2000)->Arg(20000);
BENCHMARK_MAIN();
