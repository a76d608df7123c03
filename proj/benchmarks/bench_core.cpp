#include <benchmark/benchmark.h>

#include <cmath>

#include "huygens/commutator.hpp"
#include "huygens/oracle.hpp"
#include "huygens/quadrature.hpp"
#include "huygens/signalling.hpp"
#include "huygens/special_functions.hpp"

namespace {

using namespace huygens;

void BM_BesselJ(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(1.5, x));
    x = x < 900.0 ? x * 1.01 : 0.37;
  }
}
BENCHMARK(BM_BesselJ);

void BM_BesselY(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_y(1.5, x));
    x = x < 900.0 ? x * 1.01 : 0.37;
  }
}
BENCHMARK(BM_BesselY);

void BM_Dilog(benchmark::State& state) {
  double x = -40.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilog(x));
    x = x < 0.9 ? x + 0.173 : -40.0;
  }
}
BENCHMARK(BM_Dilog);

void BM_ModeKernelLiteral(benchmark::State& state) {
  double k = 0.11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mode_kernel_g(1.5, 2.0, 1.0, k));
    k = k < 200.0 ? k * 1.02 : 0.11;
  }
}
BENCHMARK(BM_ModeKernelLiteral);

void BM_ModeKernelReduced(benchmark::State& state) {
  double k = 0.11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mode_kernel_g_reduced(1.5, 2.0, 1.0, k));
    k = k < 200.0 ? k * 1.02 : 0.11;
  }
}
BENCHMARK(BM_ModeKernelReduced);

void BM_SignalBreakdown(benchmark::State& state) {
  const auto [sa, sb] = optimal_detector_states();
  const ConformalWindow a{1.0, 3.0}, b{2.5, 3.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(s2_breakdown_windows(sa, sb, a, b, 1.0, 0.01, 0.01));
  }
}
BENCHMARK(BM_SignalBreakdown);

void BM_AdaptiveQuadOscillatory(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        adaptive_quad([](double x) { return std::sin(10.0 * x) / (1.0 + x); },
                      0.0, 20.0, 1e-10));
  }
}
BENCHMARK(BM_AdaptiveQuadOscillatory);

void BM_OracleMatterCase3(benchmark::State& state) {
  const auto [sa, sb] = optimal_detector_states();
  const ConformalWindow a{1.0, 3.0}, b{2.5, 3.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(s2_oracle_matter_windows(sa, sb, a, b, 1.0, 1e-8));
  }
}
BENCHMARK(BM_OracleMatterCase3);

void BM_WindowCommutatorCase5(benchmark::State& state) {
  const ConformalWindow a{1.0, 2.0}, b{10.0, 11.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(window_integrated_commutator(1.5, a, b, 3.0, 1e-3));
  }
}
BENCHMARK(BM_WindowCommutatorCase5);

}  // namespace

BENCHMARK_MAIN();
