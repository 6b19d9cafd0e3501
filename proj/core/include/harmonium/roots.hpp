#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "harmonium/numeric.hpp"
#include "harmonium/polynomial.hpp"

namespace harmonium::roots {

struct RealRoot {
  double value;
  /// Set when the root is rational and was found in closed form.
  std::optional<Rational> exact;
};

/// Real roots in ascending order. Closed forms for degree <= 2, companion
/// matrix eigenvalues with Newton polishing (50 digits, against the exact
/// coefficients) above that. Eigenvalues with |imag| below imag_tol count as real.
std::vector<RealRoot> real_roots(const Polynomial<Rational>& p, double imag_tol = 1e-10);

/// Real roots polished to extended precision.
std::vector<ExtReal> real_roots_ext(const Polynomial<Rational>& p, double imag_tol = 1e-10);

/// Eigenvalues of the balanced companion matrix of sum coeffs[i] x^i.
std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs);

ExtReal newton_polish(const Polynomial<Rational>& p, ExtReal x, int max_iter = 60);

/// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Number of distinct real roots in the open interval (a, b); b = nullopt is +infinity.
int sturm_count(const Polynomial<Rational>& p, const Rational& a, const std::optional<Rational>& b);

}  // namespace harmonium::roots
