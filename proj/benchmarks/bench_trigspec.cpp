#include <benchmark/benchmark.h>

#include <numbers>

#include "trigspec/special_functions.hpp"
#include "trigspec/spline_kernel.hpp"
#include "trigspec/trig_spline.hpp"

namespace {

using namespace trigspec;

AnalyticSignal signal() {
  return AnalyticSignal::power_decay_cosine(6.0, {4, std::numbers::pi * std::numbers::pi / 2.0});
}

KernelConfig config(int r, int n) {
  KernelConfig c;
  c.r = r;
  c.grid = make_grid(n);
  return c;
}

void BM_DiscreteCoeffs(benchmark::State& state) {
  const auto samples = sample(signal(), make_grid(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(discrete_coeffs(samples));
}
BENCHMARK(BM_DiscreteCoeffs)->Arg(8)->Arg(64)->Arg(256);

void BM_HFactor(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(H_factor(5, cfg));
}
BENCHMARK(BM_HFactor)->Arg(1)->Arg(3)->Arg(10);

void BM_BuildSpline(benchmark::State& state) {
  const auto cfg = config(3, static_cast<int>(state.range(0)));
  const auto samples = sample(signal(), cfg.grid);
  for (auto _ : state) benchmark::DoNotOptimize(build_spline(samples, cfg));
}
BENCHMARK(BM_BuildSpline)->Arg(2)->Arg(8)->Arg(16);

void BM_SplineEval(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), 8);
  const auto spline = build_spline(sample(signal(), cfg.grid), cfg);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spline(t));
    t += 0.001;
  }
}
BENCHMARK(BM_SplineEval)->Arg(1)->Arg(3)->Arg(10);

void BM_LerchTail(benchmark::State& state) {
  const LerchTail lerch(static_cast<int>(state.range(0)));
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lerch(theta, 17.25));
    theta += 0.01;
  }
}
BENCHMARK(BM_LerchTail)->Arg(2)->Arg(4)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
