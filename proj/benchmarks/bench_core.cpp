#include <benchmark/benchmark.h>

#include <numbers>

#include "gcf/observables.hpp"
#include "gcf/oracle.hpp"
#include "gcf/specfun.hpp"
#include "gcf/susy.hpp"

using namespace gcf;

namespace {

constexpr double kPi = std::numbers::pi;

void BM_HermiteComplex(benchmark::State& state) {
  cplx z(0.8, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::hermite(static_cast<int>(state.range(0)), z));
  }
}
BENCHMARK(BM_HermiteComplex)->Arg(5)->Arg(10)->Arg(20);

void BM_JacobiComplex(benchmark::State& state) {
  cplx a(-4.2, -1.1), b(-4.2, 1.1), z(0.0, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::jacobi(static_cast<int>(state.range(0)), a, b, z));
  }
}
BENCHMARK(BM_JacobiComplex)->Arg(4)->Arg(8)->Arg(12);

void BM_EigenfunctionEval(benchmark::State& state) {
  auto p = MagneticProfile::trig(4.0, kPi / 10.0, 1.0);
  ScalarEigenpair pair = eigenfunction_raw(p, -2.0, static_cast<int>(state.range(0)),
                                           Branch::Minus);
  double x = 1.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair.eval_raw(x));
    x = x < 2.0 ? x + 1e-6 : 1.1;
  }
}
BENCHMARK(BM_EigenfunctionEval)->Arg(1)->Arg(3)->Arg(5);

void BM_NormalizedEigenfunction(benchmark::State& state) {
  auto p = MagneticProfile::exponential(1.0, kPi / 10.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenfunction(p, 6.0, 2, Branch::Minus));
  }
}
BENCHMARK(BM_NormalizedEigenfunction)->Unit(benchmark::kMillisecond);

void BM_SpinorState(benchmark::State& state) {
  auto p = MagneticProfile::constant_from_omega(1.0, kPi / 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinor_state(p, 1.0, 2, ParticleSign::Electron));
  }
}
BENCHMARK(BM_SpinorState)->Unit(benchmark::kMillisecond);

void BM_Discretize(benchmark::State& state) {
  auto p = MagneticProfile::trig(4.0, kPi / 10.0, 1.0);
  Grid g = auto_domain(p, -2.0, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discretize(p, -2.0, Branch::Minus, g));
  }
}
BENCHMARK(BM_Discretize)->Arg(501)->Arg(2001);

void BM_DenseSpectrum(benchmark::State& state) {
  auto p = MagneticProfile::constant_from_omega(1.0, 0.0);
  Grid g(-10.0, 10.0, static_cast<int>(state.range(0)));
  DiscreteOperator op = discretize(p, 0.0, Branch::Minus, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dense_spectrum(op, 4));
  }
}
BENCHMARK(BM_DenseSpectrum)->Arg(201)->Arg(401)->Unit(benchmark::kMillisecond);

void BM_ContinuityResidual(benchmark::State& state) {
  auto p = MagneticProfile::exponential(1.0, kPi / 10.0, 1.0);
  SpinorState st = spinor_state(p, 6.0, 2, ParticleSign::Electron);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(continuity_residual(st, x));
    x = x < 4.0 ? x + 1e-6 : 0.0;
  }
}
BENCHMARK(BM_ContinuityResidual);

}  // namespace

BENCHMARK_MAIN();
