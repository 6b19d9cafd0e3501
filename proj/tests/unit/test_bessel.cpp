#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <numbers>

#include <harmonium/bessel.hpp>

using harmonium::bessel_i;

namespace {
// 30 terms of sum (x/2)^{2k+v} / (k! (k+v)!)
double series30(int v, double x) {
  double term = std::pow(0.5 * x, v);
  for (int k = 1; k <= v; ++k) term /= k;
  double sum = term;
  for (int k = 1; k < 30; ++k) {
    term *= 0.25 * x * x / (static_cast<double>(k) * (k + v));
    sum += term;
  }
  return sum;
}
}  // namespace

TEST_CASE("I0 and I1 against the series oracle") {
  for (double x : {0.5, 1.0, 5.0, 20.0})
    for (int v : {0, 1}) {
      CAPTURE(x);
      CAPTURE(v);
      CHECK(std::abs(bessel_i(v, x) / series30(v, x) - 1.0) < 1e-10);
    }
}

TEST_CASE("against the standard library across the branch switch") {
  for (double x : {1e-6, 0.3, 3.0, 16.9, 17.1, 25.0, 60.0, 300.0})
    for (int v : {0, 1}) {
      CAPTURE(x);
      const double ref = std::cyl_bessel_i(static_cast<double>(v), x);
      CHECK(std::abs(bessel_i(v, x) / ref - 1.0) < 1e-12);
      CHECK(std::abs(bessel_i(v, x, true) / (ref * std::exp(-x)) - 1.0) < 1e-12);
    }
}

TEST_CASE("derivative identity I0' = I1") {
  const double h = 1e-5;
  for (double x : {0.5, 1.0, 5.0, 20.0}) {
    const double d = (bessel_i(0, x + h) - bessel_i(0, x - h)) / (2 * h);
    CHECK(std::abs(d / bessel_i(1, x) - 1.0) < 1e-6);
  }
}

TEST_CASE("scaled forms stay finite") {
  const double x = 1e4;
  const double lead = 1.0 / std::sqrt(2 * std::numbers::pi * x);
  CHECK(harmonium::bessel_i0e(x) == doctest::Approx(lead * (1 + 1 / (8 * x) + 9 / (128 * x * x))).epsilon(1e-12));
  CHECK(harmonium::bessel_i1e(x) == doctest::Approx(lead * (1 - 3 / (8 * x) - 15 / (128 * x * x))).epsilon(1e-12));
  CHECK(bessel_i(0, 0.0) == 1.0);
  CHECK(bessel_i(1, 0.0) == 0.0);
}
