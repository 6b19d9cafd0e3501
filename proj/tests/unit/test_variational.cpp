#include <doctest.h>

#include <cmath>

#include <harmonium/errors.hpp>
#include <harmonium/qes.hpp>
#include <harmonium/variational.hpp>

using namespace harmonium;
using namespace harmonium::qes;

TEST_CASE("x_max tail bound") {
  const SexticParams p{-5.0, 4.0, Rational(0)};
  const double x = x_max(p);
  CHECK(std::exp(-p.sqrt_gamma() * std::pow(x, 4) / 2) == doctest::Approx(1e-18).epsilon(1e-9));
}

TEST_CASE("node counting") {
  CHECK(node_count(series::PowerSeries<double>(Rational(0), {1.0, 0.0, -1.0}), 3.0) == 1);
  CHECK(node_count(series::PowerSeries<double>(Rational(0), {1.0, 0.0, -1.0}), 0.5) == 0);
  CHECK(node_count(series::PowerSeries<double>(Rational(0), {2.0, -3.0, 1.0}), 5.0) == 2);
}

TEST_CASE("exact QES energies are recovered") {
  const SexticParams p{qes_condition(2, Rational(0), 1.0), 1.0, Rational(0)};
  for (double E : exact_energies(p, 2)) {
    CAPTURE(E);
    const int nodes = E > 0 ? 1 : 0;
    const auto s = variational_state(p, nodes, 24, {E - 0.5, E + 0.5});
    CHECK(std::abs(s.E_star - E) < 1e-8);
    CHECK(s.residual_norm <= 1e-12);
    CHECK(s.node_count == nodes);
    CHECK(std::abs(expectation_functional(p, E, 24)) < 1e-10);
    CHECK(residual_functional(p, E + 0.1, 24) > 1e-6);
  }
}

TEST_CASE("mapped repulsive first excited state") {
  const SexticParams p{-8.0, 1.0, Rational(-1, 2)};
  const auto bracket = default_bracket(p, 2);
  CHECK(bracket.first == 0.0);
  CHECK(bracket.second == doctest::Approx(12.0));
  const auto a = variational_state(p, 1, 20, bracket);
  const auto b = variational_state(p, 1, 24, bracket);
  CHECK(a.node_count == 1);
  CHECK(b.node_count == 1);
  CHECK(std::abs(a.E_star - b.E_star) < 1e-4);
  CHECK(b.E_star == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("failures") {
  const SexticParams p{qes_condition(2, Rational(0), 1.0), 1.0, Rational(0)};
  CHECK_THROWS_AS(variational_state(p, 7, 12, {0.0, 14.0}), NodeCountUnreachable);
  CHECK_THROWS_AS(expectation_root(p, 24, {3.0, 4.0}), BracketError);
}

TEST_CASE("Hooke-frame estimate of a non-exact state") {
  // Reference for Z = 1, omega = 1/2, m = 0, first excited level: 1.9234947227448914.
  const auto s = hooke_variational_state(1.0, 0.5, Rational(0), 1, 20, {1.2, 2.6});
  MESSAGE("Hooke-frame estimate " << s.eps_star << " with R = " << s.residual_norm);
  CHECK(s.eps_star > 1.8);
  CHECK(s.eps_star < 2.0);
  CHECK(s.residual_norm > 0.0);
}
