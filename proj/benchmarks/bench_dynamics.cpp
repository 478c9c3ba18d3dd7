#include <benchmark/benchmark.h>

#include "cosdyn/conditions.hpp"
#include "cosdyn/scenarios.hpp"
#include "cosdyn/witness.hpp"

namespace {

const cosdyn::CosineSystem& example() {
  static const cosdyn::CosineSystem sys = cosdyn::build_example({4, 1});
  return sys;
}

void BM_CosineOrbit(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  cosdyn::AtomicMeasure m({{-2, 1}, {0.5, -0.25}, {3, 2}});
  for (auto _ : state) {
    for (int k = 1; k <= n; ++k) benchmark::DoNotOptimize(cosdyn::cosine(example(), m, k));
  }
}
BENCHMARK(BM_CosineOrbit)->Arg(10)->Arg(100);

void BM_CosineIterated(benchmark::State& state) {
  // Repeated C₁* on a translation adds one atom per step.
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cosdyn::AtomicMeasure m = cosdyn::AtomicMeasure::dirac(0);
    for (int k = 0; k < n; ++k) m = cosdyn::cosine(example(), m, 1);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_CosineIterated)->Arg(16)->Arg(64);

void BM_SupCurve(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const cosdyn::CompactWindow window(-5, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cosdyn::sup_product_curve(example(), window, n, cosdyn::Direction::forward));
  }
}
BENCHMARK(BM_SupCurve)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CheckCorollary(benchmark::State& state) {
  const cosdyn::CompactWindow window(-5, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cosdyn::check_corollary(example(), window, 60, 1e-6));
  }
}
BENCHMARK(BM_CheckCorollary)->Unit(benchmark::kMillisecond);

void BM_ScanWitnesses(benchmark::State& state) {
  const auto horizon = static_cast<int>(state.range(0));
  const cosdyn::CompactWindow window(-5, 5);
  const auto mu = cosdyn::AtomicMeasure::dirac(-2);
  const auto nu = cosdyn::AtomicMeasure::dirac(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cosdyn::scan_witnesses(example(), mu, nu, window, {mu, 0.25},
                                                    {nu, 0.25}, horizon,
                                                    cosdyn::WitnessCase::e_equals_k));
  }
}
BENCHMARK(BM_ScanWitnesses)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
