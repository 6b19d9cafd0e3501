#include <doctest.h>

#include <cmath>
#include <numbers>

#include <harmonium/errors.hpp>
#include <harmonium/hooke.hpp>
#include <harmonium/observables.hpp>

using namespace harmonium;
using namespace harmonium::hooke;

namespace {
std::vector<double> grid(double a, double b, int n) {
  return observables::make_grid({a, b, n, observables::Spacing::Linear});
}

double r_coeff(const RadialWavefunction& wf, int k) { return wf.poly_r().coefficient_at(Rational(k)); }
}  // namespace

TEST_CASE("quantization polynomial for n = 2") {
  // a_2 at Et = 2: (kappa^2 / (2M+1) - 2) / (4(M+1))
  for (int m = 0; m <= 4; ++m) {
    const auto q = quantization_polynomial(2, Rational(m));
    CHECK(q[0] == Rational(-2, 4 * (m + 1)));
    CHECK(q[1] == 0);
    CHECK(q[2] == Rational(1, 4 * (m + 1) * (2 * m + 1)));
  }
}

TEST_CASE("closed-form frequencies for n = 2 and n = 3") {
  for (int m = 0; m <= 8; ++m)
    for (int Z : {1, -1, 3, -3}) {
      CAPTURE(m);
      CAPTURE(Z);
      const auto b2 = solve_frequencies(2, Rational(m), Z);
      REQUIRE(b2.size() == 1);
      REQUIRE(b2[0].omega_exact);
      CHECK(*b2[0].omega_exact == Rational(Z * Z, 2 * (2 * m + 1)));
      CHECK((b2[0].kappa > 0) == (Z > 0));
      const auto b3 = solve_frequencies(3, Rational(m), Z);
      REQUIRE(b3.size() == 1);
      REQUIRE(b3[0].omega_exact);
      CHECK(*b3[0].omega_exact == Rational(Z * Z, 4 * (4 * m + 3)));
    }
}

TEST_CASE("n = 4 has two branches") {
  for (int m = 0; m <= 8; ++m)
    for (double Z : {1.0, -1.0, 3.0, -3.0}) {
      const auto b = solve_frequencies(4, Rational(m), Z);
      REQUIRE(b.size() == 2);
      const double s = std::sqrt(73.0 + 128.0 * m + 64.0 * m * m);
      const double d = 18.0 * (4.0 * m * m + 8.0 * m + 3.0);
      CHECK(std::abs(b[0].omega - Z * Z * (10 * (1 + m) + s) / d) < 1e-12);
      CHECK(std::abs(b[1].omega - Z * Z * (10 * (1 + m) - s) / d) < 1e-12);
    }
}

TEST_CASE("polynomial parts in r") {
  for (int m = 0; m <= 3; ++m)
    for (double Z : {1.0, -2.0}) {
      const double M = m;
      const auto w2 = RadialWavefunction::build(make_branch(2, Rational(m), Z));
      CHECK(r_coeff(w2, 0) == doctest::Approx(1.0));
      CHECK(r_coeff(w2, 1) == doctest::Approx(Z / (2 * M + 1)).epsilon(1e-14));
      const auto w3 = RadialWavefunction::build(make_branch(3, Rational(m), Z));
      CHECK(r_coeff(w3, 1) == doctest::Approx(Z / (2 * M + 1)).epsilon(1e-14));
      CHECK(r_coeff(w3, 2) == doctest::Approx(Z * Z / (2 * (2 * M + 1) * (4 * M + 3))).epsilon(1e-14));
    }
}

TEST_CASE("n = 4 lower branch coefficients") {
  for (int m = 0; m <= 3; ++m) {
    CAPTURE(m);
    const double M = m, Z = 1.0;
    const double s = std::sqrt(73 + 128 * M + 64 * M * M);
    const auto wf = RadialWavefunction::build(solve_frequencies(4, Rational(m), Z)[1]);
    const double q = 4 * M * M + 8 * M + 3;
    CHECK(r_coeff(wf, 2) == doctest::Approx(Z * Z * (s - 4 * M - 1) / (12 * (M + 1) * q)).epsilon(1e-12));
    const double num = Z * Z * Z * (11 * s + 2 * M * (7 * s - 89) - 104 * M * M - 83);
    // The denominator carries (4M^2 + 8M + 3)^2; without the +3 it is singular at m = 0.
    CHECK(r_coeff(wf, 3) == doctest::Approx(num / (108 * (M + 1) * q * q)).epsilon(1e-12));
    if (m > 0) CHECK(std::abs(r_coeff(wf, 3) * (108 * (M + 1) * std::pow(4 * M * M + 8 * M, 2)) / num - 1.0) > 0.05);
  }
}

TEST_CASE("rho^3 coefficient of the general expansion") {
  const Rational kappa(3, 2), et(5, 7), m(1);
  const Rational two_m = 2 * m;
  const auto a = recurrence_coefficients(kappa, et, m, 4);
  const Rational expected = kappa * kappa * kappa / ((two_m + 1) * 2 * (two_m + 2) * 3 * (two_m + 3)) -
                            kappa * et / ((two_m + 1) * 3 * (two_m + 3)) -
                            kappa * et / (2 * (two_m + 2) * 3 * (two_m + 3)) +
                            2 * kappa / ((two_m + 1) * 3 * (two_m + 3));
  CHECK(a[3] == expected);
  const Rational as_written = kappa * kappa * kappa / ((two_m + 1) * 2 * (two_m + 2) * 3 * (two_m + 3)) -
                              kappa * et / ((two_m + 1) * 3 * (two_m + 3)) +
                              kappa * et / (2 * (two_m + 2) * 3 * (two_m + 3)) -
                              2 * kappa / ((two_m + 1) * 3 * (two_m + 3));
  CHECK(a[3] != as_written);
}

TEST_CASE("termination leaves a_{n+1} = 0") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& b : solve_frequencies(n, Rational(1), 1.0)) {
      const auto a = coefficient_recurrence<ExtReal>(ExtReal(b.kappa), n, Rational(1));
      CHECK(abs(a[static_cast<std::size_t>(n)]) < 1e-12);
      CHECK(abs(a[static_cast<std::size_t>(n + 1)]) < 1e-12);
    }
}

TEST_CASE("eigen-residual and eigenvalue") {
  const auto g = grid(1e-3, 12.0, 300);
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= 3; ++m)
      for (double Z : {1.0, -1.0})
        for (const auto& b : solve_frequencies(n, Rational(m), Z)) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(Z);
          CHECK(b.eps_rel == doctest::Approx(b.omega * (n + m)).epsilon(1e-14));
          const auto wf = RadialWavefunction::build(b);
          CHECK(verify_branch(wf, HookeParams::with_omega_tilde(Z, b.m, b.omega), g) < 1e-9);
        }
  CHECK(std::abs(make_branch(2, Rational(0), 1.0).eps_rel - 1.0) < 1e-10);
}

TEST_CASE("perturbed trap frequency is detected") {
  const auto b = make_branch(2, Rational(0), 1.0);
  const auto wf = RadialWavefunction::build(b);
  CHECK(verify_branch(wf, HookeParams::with_omega_tilde(1.0, b.m, b.omega * (1 + 1e-6)), grid(1e-3, 12, 200)) > 1e-8);
}

TEST_CASE("normalization against Gamma moments") {
  // u^2 = N^2 e^{-r^2/2} r (1 + Z r)^2 at omega = 1/2, m = 0; moments 1, sqrt(pi/2), 2.
  for (double Z : {1.0, -1.0}) {
    const auto wf = RadialWavefunction::build(make_branch(2, Rational(0), Z));
    const double expected = 1.0 / (3.0 + Z * std::sqrt(2 * std::numbers::pi));
    CHECK(wf.norm() * wf.norm() == doctest::Approx(expected).epsilon(1e-12));
  }
  // Oscillator ground state: u^2 = N^2 e^{-w r^2} r, N^2 = 2 w.
  const auto osc = RadialWavefunction::build(oscillator_branch(1, Rational(0), 0.7));
  CHECK(osc.norm() * osc.norm() == doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("nodes") {
  const auto rep = RadialWavefunction::build(make_branch(2, Rational(0), -1.0));
  REQUIRE(rep.node_count() == 1);
  CHECK(rep.nodes()[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(RadialWavefunction::build(make_branch(2, Rational(0), 1.0)).node_count() == 0);
  for (const auto& b : solve_frequencies(6, Rational(0), -1.0)) {
    const auto wf = RadialWavefunction::build(b);
    CHECK(static_cast<int>(wf.nodes().size()) == wf.node_count());
    for (double r : wf.nodes()) CHECK(std::abs(wf.u(r)) < 1e-10);
  }
}

TEST_CASE("oscillator and missing branches") {
  CHECK_THROWS_AS(oscillator_branch(2, Rational(0), 0.5), NoBranchError);
  const auto b = make_branch(3, Rational(1), 0.0, 0.25);
  CHECK(b.omega == 0.25);
  CHECK(b.eps_rel == doctest::Approx(0.25 * 4));
}

TEST_CASE("energies") {
  const auto b = make_branch(2, Rational(1), 1.0);
  const auto p = HookeParams::with_omega_tilde(1.0, Rational(1), b.omega, 0.1);
  const auto e = energies(b, p, 0);
  CHECK(e.eps == doctest::Approx(e.eps_rel + 0.05));
  CHECK(e.eps_doubled == doctest::Approx(2 * e.eps_rel));
  CHECK(e.total == doctest::Approx(2 * e.eps + p.omega0));
  CHECK_THROWS_AS(energies(b, HookeParams::with_omega_tilde(1.0, Rational(1), 2 * b.omega), 0), InconsistentParams);
}
