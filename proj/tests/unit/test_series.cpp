#include <doctest.h>

#include <cmath>
#include <random>

#include <harmonium/errors.hpp>
#include <harmonium/hooke.hpp>
#include <harmonium/series.hpp>

using namespace harmonium;
using series::EulerPolynomial;
using series::MonomialOperator;
using series::PowerSeries;

TEST_CASE("power series evaluation with fractional base") {
  const PowerSeries<double> y(Rational(1, 2), {1.0, 2.0});
  CHECK(y.evaluate(4.0) == doctest::Approx(18.0));
  // d/dx (x^{1/2} + 2 x^{3/2}) = x^{-1/2}/2 + 3 x^{1/2}
  CHECK(y.evaluate(4.0, 1) == doctest::Approx(0.25 + 6.0));
  CHECK(y.coefficient_at(Rational(3, 2)) == 2.0);
  CHECK(y.coefficient_at(Rational(1)) == 0.0);
}

TEST_CASE("monomial operator action") {
  MonomialOperator<Rational> L;
  L.add(Rational(3), 2, 1);  // 3 x^2 d/dx
  L.add(Rational(-1), 0, 2);  // -d^2/dx^2
  const auto out = series::apply_operator(L, PowerSeries<Rational>::monomial(Rational(5, 2), Rational(1)));
  CHECK(out.coefficient_at(Rational(7, 2)) == Rational(15, 2));
  CHECK(out.coefficient_at(Rational(1, 2)) == Rational(-15, 4));
  CHECK(*L.net_degree_shift() == -2);
}

TEST_CASE("indicial roots") {
  SUBCASE("rational") {
    const auto F = EulerPolynomial::from_roots({Rational(1, 2), Rational(-3), Rational(0)});
    const auto r = series::indicial_roots(F);
    CHECK(r.rational == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(-3)});
    CHECK(r.irrational.empty());
  }
  SUBCASE("irrational pair") {
    const auto r = series::indicial_roots(EulerPolynomial({Rational(-2), Rational(0), Rational(1)}));
    CHECK(r.rational.empty());
    REQUIRE(r.irrational.size() == 2);
    CHECK(std::abs(std::abs(r.irrational[0]) - std::sqrt(2.0)) < 1e-14);
    CHECK(r.irrational[0] * r.irrational[1] == doctest::Approx(-2.0));
  }
  SUBCASE("Hooke symbol") {
    const auto r = series::indicial_roots(hooke::hooke_euler(Rational(3)));
    CHECK(r.rational == std::vector<Rational>{Rational(0), Rational(-6)});
  }
}

// Airy: x^2 y'' - x^3 y = 0, F(D) = D(D - 1), P = -x^3.
TEST_CASE("series solve reproduces the Airy expansion exactly") {
  const EulerPolynomial F({Rational(0), Rational(-1), Rational(1)});
  MonomialOperator<Rational> P;
  P.add(Rational(-1), 3, 0);
  const auto ai = series::series_solve(F, P, Rational(0), 9);
  CHECK(ai.coefficient_at(Rational(0)) == 1);
  CHECK(ai.coefficient_at(Rational(3)) == Rational(1, 6));
  CHECK(ai.coefficient_at(Rational(6)) == Rational(1, 180));
  CHECK(ai.coefficient_at(Rational(9)) == Rational(1, 12960));
  CHECK(ai.coefficient_at(Rational(4)) == 0);
  const auto bi = series::series_solve(F, P, Rational(1), 6);
  CHECK(bi.coefficient_at(Rational(4)) == Rational(1, 12));
  CHECK(bi.coefficient_at(Rational(7)) == Rational(1, 504));
}

TEST_CASE("series solve for exp in double and extended precision") {
  const EulerPolynomial F({Rational(0), Rational(1)});
  MonomialOperator<double> P;
  P.add(-1.0, 1, 0);
  const auto e = series::series_solve(F, P, Rational(0), 25);
  CHECK(e.evaluate(1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(series::residual(MonomialOperator<double>({{1.0, 0, 1}, {-1.0, 0, 0}}), e, std::vector<double>{0.1, 0.5}) <
        1e-15);

  MonomialOperator<ExtReal> Pe;
  Pe.add(ExtReal(-1), 1, 0);
  const auto ee = series::series_solve(F, Pe, Rational(0), 40);
  ExtReal sum = 0;
  for (const auto& c : ee.coeffs()) sum += c;
  CHECK(abs(sum - exp(ExtReal(1))) < ExtReal("1e-45"));
}

TEST_CASE("resonance and invalid roots") {
  const auto F = hooke::hooke_euler(Rational(1));
  const auto P = hooke::hooke_p<Rational>(Rational(1), Rational(2));
  CHECK_THROWS_AS(series::series_solve(F, P, Rational(-2), 4), ResonanceError);
  CHECK_THROWS_AS(series::series_solve(F, P, Rational(1), 4), std::invalid_argument);
  CHECK_NOTHROW(series::series_solve(F, P, Rational(0), 4));
}

TEST_CASE("Hooke operator equals the hand-written three-term recurrence") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7), mm(0, 5);
  for (int trial = 0; trial < 12; ++trial) {
    const Rational m(mm(rng));
    const Rational kappa(num(rng), den(rng));
    const Rational et(num(rng), den(rng));
    std::vector<Rational> a{Rational(1)};
    for (int j = 1; j < 60; ++j) {
      Rational rhs = kappa * a[j - 1];
      if (j >= 2) rhs += (Rational(2 * (j - 2)) - et) * a[j - 2];
      a.push_back(rhs / (Rational(j) * (j + 2 * m)));
    }
    const auto s = series::series_solve(hooke::hooke_euler(m), hooke::hooke_p(kappa, et), Rational(0), 59);
    CHECK(s.coeffs() == a);
  }
}
