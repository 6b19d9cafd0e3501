#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include <harmonium/entropy.hpp>
#include <harmonium/hooke.hpp>
#include <harmonium/observables.hpp>

using namespace harmonium;
using namespace harmonium::entropy;

namespace {
observables::PairCorrelation G(int n, int m, double Z) {
  return observables::PairCorrelation(hooke::RadialWavefunction::build(hooke::make_branch(n, Rational(m), Z)));
}
}  // namespace

TEST_CASE("Coulomb-free ground state entropy") {
  for (double w : {0.1, 0.5, 2.0}) {
    const auto wf = hooke::RadialWavefunction::build(hooke::oscillator_branch(1, Rational(0), w));
    CHECK(std::abs(total_entropy(wf) - (1.0 + std::log(std::numbers::pi / w))) < 1e-8);
  }
}

TEST_CASE("total entropy agrees with a direct Simpson sum") {
  const auto g = G(3, 1, -1.0);
  const int n = 80000;
  const double h = 80.0 / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = i * h;
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    sum += w * entropy_density_at(g, r) * 2 * std::numbers::pi * r;
  }
  CHECK(total_entropy(g.wavefunction()) == doctest::Approx(sum * h / 3).epsilon(1e-7));
}

TEST_CASE("entropy density at the origin") {
  CHECK(entropy_density_at(G(2, 1, -1.0), 0.0) == 0.0);
  CHECK(entropy_density_at(G(3, 2, 1.0), 0.0) == 0.0);
  CHECK(entropy_density_at(G(3, 0, -1.0), 0.0) > 0.0);
  // G(0) = N^2 / (2 pi) with N^2 = 1 / (3 - sqrt(2 pi)) for n = 2, m = 0, Z = -1.
  const double g0 = 1.0 / (2 * std::numbers::pi * (3.0 - std::sqrt(2 * std::numbers::pi)));
  const auto g = G(2, 0, -1.0);
  CHECK(g(0.0) == doctest::Approx(g0).epsilon(1e-12));
  CHECK(entropy_density_at(g, 0.0) == doctest::Approx(-g0 * std::log(g0)).epsilon(1e-12));
}

TEST_CASE("entropy vanishes at nodes") {
  const auto g = G(2, 0, -1.0);
  CHECK(entropy_density_at(g, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("entropy grows with m at n = 3") {
  const auto rows = entropy_scan(3, {0, 1, 2, 3, 4}, {1.0, -1.0});
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].omega <= rows[i].omega);
  std::map<double, std::map<int, double>> s;
  for (const auto& r : rows) s[r.Z][r.m] = r.entropy;
  for (int m = 0; m <= 4; ++m) {
    CHECK(s[-1.0][m] > s[1.0][m]);
    if (m > 0) {
      CHECK(s[1.0][m] > s[1.0][m - 1]);
      CHECK(s[-1.0][m] > s[-1.0][m - 1]);
    }
  }
}

TEST_CASE("surface layout") {
  const auto g = G(2, 0, -1.0);
  const auto surf = entropy_surface(g, 21, 3.0);
  REQUIRE(surf.x.size() == 21);
  REQUIRE(surf.values.size() == 441);
  CHECK(surf.x.front() == -3.0);
  CHECK(surf.values[10 * 21 + 10] == doctest::Approx(entropy_density_at(g, 0.0)));
  CHECK(surf.values[3 * 21 + 5] == doctest::Approx(surf.values[5 * 21 + 3]));
  CHECK(entropy_surface(g, 5).x.back() == doctest::Approx(5.0 / std::sqrt(0.5)));
}
