#include <benchmark/benchmark.h>

#include <harmonium/hooke.hpp>
#include <harmonium/qes.hpp>
#include <harmonium/series.hpp>
#include <harmonium/variational.hpp>

using namespace harmonium;

static void BM_SeriesSolveRational(benchmark::State& state) {
  const auto F = hooke::hooke_euler(Rational(2));
  const auto P = hooke::hooke_p<Rational>(Rational(3, 2), Rational(5, 7));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series::series_solve(F, P, Rational(0), N));
}
BENCHMARK(BM_SeriesSolveRational)->Arg(15)->Arg(30)->Arg(60);

static void BM_SeriesSolveExtReal(benchmark::State& state) {
  const auto F = hooke::hooke_euler(Rational(2));
  const auto P = hooke::hooke_p<ExtReal>(ExtReal("1.5"), ExtReal("0.7"));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series::series_solve(F, P, Rational(0), N));
}
BENCHMARK(BM_SeriesSolveExtReal)->Arg(15)->Arg(30)->Arg(60);

static void BM_SolveFrequencies(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hooke::solve_frequencies(n, Rational(1), 1.0));
}
BENCHMARK(BM_SolveFrequencies)->DenseRange(2, 8, 2);

static void BM_BuildWavefunction(benchmark::State& state) {
  const auto b = hooke::solve_frequencies(static_cast<int>(state.range(0)), Rational(1), -1.0).front();
  for (auto _ : state) benchmark::DoNotOptimize(hooke::RadialWavefunction::build(b));
}
BENCHMARK(BM_BuildWavefunction)->Arg(2)->Arg(4)->Arg(6);

static void BM_ResidualFunctional(benchmark::State& state) {
  const qes::SexticParams p{-8.0, 1.0, Rational(-1, 2)};
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qes::residual_functional(p, 1.7, N));
}
BENCHMARK(BM_ResidualFunctional)->Arg(12)->Arg(24);
