#include <doctest.h>

#include <cmath>
#include <numbers>

#include <harmonium/hooke.hpp>
#include <harmonium/observables.hpp>

using namespace harmonium;
using namespace harmonium::observables;

TEST_CASE("grid specifications") {
  const auto lin = make_grid(GridSpec::parse("0:8:512"));
  REQUIRE(lin.size() == 512);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 8.0);
  CHECK(lin[1] == doctest::Approx(8.0 / 511));
  const auto lg = make_grid(GridSpec::parse("1e-3:10:5:log"));
  REQUIRE(lg.size() == 5);
  CHECK(lg[1] == doctest::Approx(1e-2));
  CHECK(lg[4] == doctest::Approx(10.0));
  CHECK_THROWS_AS(GridSpec::parse("0:8"), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(GridSpec::parse("0:8:1")), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(GridSpec::parse("0:8:10:log")), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:8:10:cubic"), std::invalid_argument);
  const auto d = GridSpec::for_omega(0.25);
  CHECK(d.max == doctest::Approx(24.0));
  CHECK(d.spacing == Spacing::Log);
}

TEST_CASE("pair correlation is normalized in two dimensions") {
  for (double Z : {1.0, -1.0}) {
    const PairCorrelation G(hooke::RadialWavefunction::build(hooke::make_branch(3, Rational(1), Z)));
    CHECK(G.norm() == doctest::Approx(1.0).epsilon(1e-10));
    const double r = 1.7;
    CHECK(std::log(G(r)) == doctest::Approx(G.log_value(r)).epsilon(1e-13));
  }
  const PairCorrelation osc(hooke::RadialWavefunction::build(hooke::oscillator_branch(1, Rational(0), 0.5)));
  CHECK(osc(0.0) == doctest::Approx(0.5 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("density of the Coulomb-free ground state") {
  // Gaussian convolution: n(x) = 8 b w / (pi (b + 4w)) exp(-4 b w x^2 / (b + 4w)).
  const double w = 0.5;
  const auto wf = hooke::RadialWavefunction::build(hooke::oscillator_branch(1, Rational(0), w));
  for (double beta : {0.5, 2.0, 3.0}) {
    const DensityEvaluator n(wf, {beta});
    const DensityEvaluator na(wf, {beta}, DensityMethod::Angular);
    for (double x : {0.0, 0.4, 1.3, 3.0}) {
      const double exact = 8 * beta * w / (std::numbers::pi * (beta + 4 * w)) *
                           std::exp(-4 * beta * w * x * x / (beta + 4 * w));
      CHECK(n(x) == doctest::Approx(exact).epsilon(1e-10));
      CHECK(na(x) == doctest::Approx(exact).epsilon(1e-9));
    }
    CHECK(n.total() == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("kernel and angular methods agree on Coulomb states") {
  const auto b = hooke::make_branch(3, Rational(0), -1.0);
  const auto wf = hooke::RadialWavefunction::build(b);
  const auto cm = hooke::CenterOfMassState::physical(b);
  const DensityEvaluator k(wf, cm), a(wf, cm, DensityMethod::Angular);
  for (double x : {0.0, 1.0, 4.0, 9.0}) CHECK(k(x) == doctest::Approx(a(x)).epsilon(1e-9));
  CHECK(k.total() == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("profile integral and normalization") {
  DensityProfile p{make_grid({0.0, 1.0, 11, Spacing::Linear}), {}, 2.0};
  for (double r : p.grid) p.values.push_back(1.0 - r);
  // trapezoid of 2 pi r (1 - r) on a uniform grid of step h: 2 pi (1/6 - h^2/6)
  CHECK(p.integral() == doctest::Approx(2 * std::numbers::pi * (1.0 / 6 - 0.01 / 6)).epsilon(1e-14));
  p.normalize();
  CHECK(p.integral() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("relative deviation ignores the far tail") {
  const std::vector<double> a{1.0, 0.5, 1e-12}, b{1.0, 0.5005, 2e-12};
  CHECK(max_relative_deviation(a, b) == doctest::Approx(0.0005 / 0.5005));
  CHECK(max_relative_deviation(a, b, 1e-14) == doctest::Approx(0.5));
}
