#pragma once

// Sextic oscillator with a centrifugal barrier,
//
//   H = -1/2 d^2/dx^2 + m(m+1)/(2x^2) + alpha/2 x^2 + gamma/2 x^6,
//
// conjugated by psi0 = x^{m+1} exp(-sqrt(gamma) x^4 / 4) into
//
//   H~ = -1/2 d^2 + sqrt(gamma) x^3 d + A x^2 - (m+1) x^-1 d,
//   A  = alpha/2 + (2m+5) sqrt(gamma)/2.
//
// Multiplying (H~ - E) f = 0 by -2x^2 gives [D(D+2m+1) + P] f = 0 with
// P = 2E x^2 - 2A x^4 - 2 sqrt(gamma) x^5 d. When A = -n sqrt(gamma) the
// recurrence can stop at x^n; x = sqrt(r) turns the problem into the planar
// Hooke radial equation.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "harmonium/hooke.hpp"
#include "harmonium/numeric.hpp"
#include "harmonium/series.hpp"

namespace harmonium::qes {

struct SexticParams {
  double alpha = 0.0;
  double gamma = 1.0;
  /// Centrifugal index; the Hooke mapping can make it a half-integer.
  Rational m{0};

  double sqrt_gamma() const;
  double A() const;
};

/// -1/2 d^2 + sqrt(gamma) x^3 d + A x^2 - (m+1) x^-1 d
series::MonomialOperator<double> reduced_qes_operator(const SexticParams& p);

/// -1/2 d^2 + m(m+1)/2 x^-2 + alpha/2 x^2 + gamma/2 x^6
series::MonomialOperator<double> sextic_operator(const SexticParams& p);

/// D(D + 2m + 1)
series::EulerPolynomial qes_euler(const SexticParams& p);

enum class SeriesForm {
  /// P = 2E x^2 - 2A x^4 - 2 sqrt(gamma) x^5 d, consistent with the reduced operator.
  Operator,
  /// P = E x^2 - A x^4 - 2 sqrt(gamma) x^5 d, the form the classic displayed expansion uses.
  Displayed,
};

template <class T>
series::MonomialOperator<T> qes_p(const T& E, const T& A, const T& sqrt_gamma, SeriesForm form) {
  const T two = series::one<T>() + series::one<T>();
  const T k = form == SeriesForm::Operator ? two : series::one<T>();
  series::MonomialOperator<T> p;
  p.add(k * E, 2, 0);
  p.add(-(k * A), 4, 0);
  p.add(-(two * sqrt_gamma), 5, 1);
  return p;
}

/// f(x) = 1 + c_1 x^2 + ... with every exponent up to N exact.
series::PowerSeries<double> qes_series(double E, const SexticParams& p, int N, SeriesForm form = SeriesForm::Operator);
series::PowerSeries<ExtReal> qes_series_ext(const ExtReal& E, const SexticParams& p, int N,
                                            SeriesForm form = SeriesForm::Operator);

/// alpha with A = -n sqrt(gamma): alpha = -sqrt(gamma) (2n + 2m + 5).
double qes_condition(int n, const Rational& m, double gamma);

/// A + n sqrt(gamma)
double condition_residual(const SexticParams& p, int n);

/// Energies of the exact polynomial states at A = -n sqrt(gamma), n even
/// (f of degree n in x). Ascending.
std::vector<double> exact_energies(const SexticParams& p, int n);

struct HookeEquivalence {
  double omega;
  double Z;
  double eps_rel;
  Rational m_tilde;
};

/// omega = sqrt(gamma)/2, Z = -E/2, eps_rel = -alpha/8, m~ = (2m+1)/4.
HookeEquivalence map_to_hooke(const SexticParams& p, double E);

struct SexticMapping {
  SexticParams params;
  double E;
  /// False when the Hooke m~ does not correspond to an integer sextic m.
  bool integer_m;
  /// Degree of the exact polynomial in x, 2(n_Hooke - 1).
  int n_qes;
};

/// gamma = 4 omega^2, E = -2Z, alpha = -8 eps_rel, m = (4 m~ - 1)/2.
SexticMapping map_from_hooke(const hooke::QuantizationBranch& branch);
SexticMapping map_from_hooke(const HookeEquivalence& h);

/// Hooke radial function of a sextic polynomial state: u(r) = r^{1/4} psi0(sqrt r) f(sqrt r)
/// as the series r^{(2m+3)/4} sum c_k r^k times exp(-omega r^2 / 2).
series::PowerSeries<double> mapped_prefactor(const series::PowerSeries<double>& f, const SexticParams& p);

/// max |(L_Hooke - eps_rel) u| / max |u| for the mapped state on the r grid.
double mapped_residual(const SexticParams& p, double E, const series::PowerSeries<double>& f,
                       std::span<const double> r_grid);

/// max |(H~ - E) f| / max(1, max |f|) on the x grid.
double qes_residual(const SexticParams& p, double E, const series::PowerSeries<double>& f,
                    std::span<const double> x_grid);

}  // namespace harmonium::qes
