#include <benchmark/benchmark.h>

#include <harmonium/closed_form.hpp>
#include <harmonium/entropy.hpp>
#include <harmonium/hooke.hpp>
#include <harmonium/observables.hpp>

using namespace harmonium;

namespace {
hooke::RadialWavefunction state_n3() {
  return hooke::RadialWavefunction::build(hooke::make_branch(3, Rational(0), -1.0));
}
}  // namespace

static void BM_DensityPoint(benchmark::State& state) {
  const auto wf = state_n3();
  const observables::DensityEvaluator n(wf, hooke::CenterOfMassState::matched(wf.branch()),
                                        static_cast<observables::DensityMethod>(state.range(0)));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(n(x));
    x = x > 10.0 ? 0.0 : x + 0.37;
  }
}
BENCHMARK(BM_DensityPoint)->Arg(0)->Arg(1);

static void BM_DensityProfile(benchmark::State& state) {
  const auto wf = state_n3();
  const auto grid = observables::make_grid({0.0, 8.0, static_cast<int>(state.range(0)), observables::Spacing::Linear});
  for (auto _ : state)
    benchmark::DoNotOptimize(observables::density_quadrature(wf, hooke::CenterOfMassState::matched(wf.branch()), grid));
}
BENCHMARK(BM_DensityProfile)->Arg(64)->Arg(256);

static void BM_ClosedForm(benchmark::State& state) {
  const auto grid = observables::make_grid({0.0, 8.0, 512, observables::Spacing::Linear});
  for (auto _ : state) benchmark::DoNotOptimize(closed_form::closed_form_density(closed_form::CaseId::N3M0Zp1, grid));
}
BENCHMARK(BM_ClosedForm);

static void BM_TotalEntropy(benchmark::State& state) {
  const auto wf = hooke::RadialWavefunction::build(
      hooke::solve_frequencies(static_cast<int>(state.range(0)), Rational(1), 1.0).front());
  for (auto _ : state) benchmark::DoNotOptimize(entropy::total_entropy(wf));
}
BENCHMARK(BM_TotalEntropy)->Arg(2)->Arg(3)->Arg(5);

static void BM_EntropyScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(entropy::entropy_scan(3, {0, 1, 2, 3, 4}, {1.0, -1.0}));
}
BENCHMARK(BM_EntropyScan)->Unit(benchmark::kMillisecond);
