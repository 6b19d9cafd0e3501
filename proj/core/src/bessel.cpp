#include "harmonium/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harmonium {
namespace {

constexpr double kSeriesLimit = 17.0;

// sum_k (x/2)^{2k+nu} / (k! (k+nu)!)
double power_series(int nu, double x) {
  const double h = 0.5 * x;
  const double h2 = h * h;
  double term = nu == 0 ? 1.0 : h;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= h2 / (static_cast<double>(k) * static_cast<double>(k + nu));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(nu) x^{-k}
double hankel_scaled(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) > last) break;  // past the smallest term
    sum += term;
    last = std::abs(term);
    if (last < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_i(int order, double x, bool scaled) {
  if (order != 0 && order != 1) throw std::invalid_argument("bessel_i: order must be 0 or 1");
  if (!(x >= 0.0)) throw std::invalid_argument("bessel_i: argument must be nonnegative");
  if (x < kSeriesLimit) {
    const double v = power_series(order, x);
    return scaled ? v * std::exp(-x) : v;
  }
  const double v = hankel_scaled(order, x);
  return scaled ? v : v * std::exp(x);
}

}  // namespace harmonium
