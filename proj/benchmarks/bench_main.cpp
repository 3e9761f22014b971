#include <benchmark/benchmark.h>

#include "cuspforge/assembly.hpp"
#include "cuspforge/cusp.hpp"
#include "cuspforge/curvature.hpp"
#include "cuspforge/geodesic.hpp"
#include "cuspforge/profile.hpp"
#include "cuspforge/series.hpp"
#include "cuspforge/surface.hpp"

namespace {

using namespace cuspforge;

void BM_ProfileJet(benchmark::State& state) {
  ProfileFunction f = make_decay_profile(-2.0, DecayMode::Exponential);
  double t = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.jet(t));
    t += 0.001;
    if (t > 20.0) t = -2.0;
  }
}
BENCHMARK(BM_ProfileJet);

void BM_CuspVolume(benchmark::State& state) {
  CuspModel c{3, 1.0, ProfileFunction::exponential(0.0, kInf), 0.0, kInf};
  for (auto _ : state) benchmark::DoNotOptimize(cusp_volume(c, 1e-10));
}
BENCHMARK(BM_CuspVolume);

void BM_CurvatureScan(benchmark::State& state) {
  ProfileFunction f = ProfileFunction::exponential(0.0, kInf);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        plane_curvature_bounds(f, Interval{0.0, 10.0}, 4096));
}
BENCHMARK(BM_CurvatureScan);

void BM_GeodesicArc(benchmark::State& state) {
  RevolutionSurface horn = RevolutionSurface::exp_horn();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        integrate_geodesic(horn, 0.0, 0.0, 0.3, 10.0, 1e-8));
}
BENCHMARK(BM_GeodesicArc);

void BM_SeriesClassify(benchmark::State& state) {
  auto term = [](double k) { return 1.0 / (k * k); };
  for (auto _ : state) benchmark::DoNotOptimize(classify_series(term, 1));
}
BENCHMARK(BM_SeriesClassify);

void BM_GraphCurvatureMass(benchmark::State& state) {
  GraphSurfaceMetric surf;
  for (auto _ : state)
    benchmark::DoNotOptimize(surf.total_curvature(5.0, 1e-6));
}
BENCHMARK(BM_GraphCurvatureMass);

}  // namespace

BENCHMARK_MAIN();
