#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "dunkl/bessel.hpp"
#include "dunkl/convolution.hpp"
#include "dunkl/intertwine1d.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/polyexact.hpp"
#include "dunkl/transform.hpp"

using namespace dunkl;

static void BM_IntertwinerTable(benchmark::State& state) {
  const RootSystem rs = root_system_from_preset("z2xz2:1,2");
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Intertwiner v(rs, degree);
    benchmark::DoNotOptimize(v.matrix(degree));
  }
}
BENCHMARK(BM_IntertwinerTable)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_IntertwineB2(benchmark::State& state) {
  const RootSystem rs = root_system_from_preset("b2:1,1");
  for (auto _ : state) {
    Intertwiner v(rs, 6);
    benchmark::DoNotOptimize(v.matrix(6));
  }
}
BENCHMARK(BM_IntertwineB2)->Unit(benchmark::kMillisecond);

static void BM_Kernel1d(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_1d_oscillatory(1.5, x, 2.3));
    x += 1e-6;
  }
}
BENCHMARK(BM_Kernel1d);

static void BM_Bessel(benchmark::State& state) {
  double z = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j_normalized(1.0, z));
    z += 1e-6;
  }
}
BENCHMARK(BM_Bessel);

static void BM_DunklTransform(benchmark::State& state) {
  const TransformPlan plan(RootSystem::rank_one(Rational(1)), GridOptions::from_grid_n(static_cast<int>(state.range(0))));
  const SampledFunction f = hermite_gaussian(2).as_sampled();
  const std::vector<double> y{1.3};
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_transform(f, std::span<const double>(y), plan));
}
BENCHMARK(BM_DunklTransform)->Arg(65)->Arg(257)->Unit(benchmark::kMicrosecond);

static void BM_VkNumeric(benchmark::State& state) {
  const auto f = [](double t) { return t * t * std::exp(-t); };
  for (auto _ : state) benchmark::DoNotOptimize(V_k_num(2.0, f, 1.7));
}
BENCHMARK(BM_VkNumeric);

static void BM_TvkNumeric(benchmark::State& state) {
  const Function1d f = hermite_gaussian(2);
  for (auto _ : state) benchmark::DoNotOptimize(tV_k_num(1.5, f, 0.8));
}
BENCHMARK(BM_TvkNumeric)->Unit(benchmark::kMicrosecond);

static void BM_SpectralTranslation(benchmark::State& state) {
  const TransformPlan plan(RootSystem::rank_one(Rational(1)), GridOptions::from_grid_n(257));
  const SpectralTranslator tau(hermite_gaussian(0), plan);
  for (auto _ : state) benchmark::DoNotOptimize(tau(0.6, -0.4));
}
BENCHMARK(BM_SpectralTranslation)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
