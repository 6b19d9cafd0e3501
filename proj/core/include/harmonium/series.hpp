#pragma once

// Operator series solutions of linear ODEs written as [F(D) + P(x, d/dx)] y = 0,
// D = x d/dx. For an indicial root lambda, F(lambda) = 0,
//
//   y = sum_{nu >= 0} (-1)^nu [F(D)^{-1} P]^nu x^lambda
//
// Each application of P raises the lowest exponent by at least one, so the
// truncation at lambda + N is reached after finitely many terms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmonium/errors.hpp"
#include "harmonium/numeric.hpp"
#include "harmonium/polynomial.hpp"

namespace harmonium::series {

template <class T>
T zero() {
  return from_rational<T>(Rational(0));
}

template <class T>
T one() {
  return from_rational<T>(Rational(1));
}

/// Generalized power series x^base * sum_i c_i x^i.
///
/// The leading coefficient is nonzero unless the series is identically zero
/// (empty). Trailing zeros are kept: a series returned by series_solve has one
/// slot per exponent up to its truncation order.
template <class T>
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(Rational base_exponent, std::vector<T> coeffs)
      : base_(std::move(base_exponent)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static PowerSeries monomial(const Rational& exponent, T coeff) {
    return PowerSeries(exponent, std::vector<T>{std::move(coeff)});
  }

  const Rational& base_exponent() const { return base_; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  /// Highest stored exponent; base exponent for the zero series.
  Rational max_exponent() const {
    return coeffs_.empty() ? base_ : Rational(base_ + static_cast<long>(coeffs_.size() - 1));
  }

  /// Coefficient of x^exponent (zero when outside the stored range or when the
  /// exponent is not on the base + integer lattice).
  T coefficient_at(const Rational& exponent) const {
    const Rational offset = exponent - base_;
    if (coeffs_.empty() || !is_integer(offset) || offset < 0) return zero<T>();
    const long idx = boost::multiprecision::numerator(offset).convert_to<long>();
    if (idx >= static_cast<long>(coeffs_.size())) return zero<T>();
    return coeffs_[static_cast<std::size_t>(idx)];
  }

  /// Drop every term with exponent above max_exponent.
  PowerSeries truncated(const Rational& max_exponent) const {
    if (coeffs_.empty() || max_exponent < base_) return {};
    const Rational span = max_exponent - base_;
    // floor of a nonnegative rational
    const auto whole = boost::multiprecision::numerator(span) / boost::multiprecision::denominator(span);
    const std::size_t keep = std::min(coeffs_.size(), static_cast<std::size_t>(whole.template convert_to<long>()) + 1);
    return PowerSeries(base_, std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)));
  }

  /// Extend with zeros so that the series carries every exponent up to max_exponent.
  PowerSeries padded_to(const Rational& max_exponent) const {
    PowerSeries out = *this;
    if (out.coeffs_.empty()) return out;
    const Rational span = max_exponent - base_;
    if (span < 0 || !is_integer(span)) return out;
    const auto want = boost::multiprecision::numerator(span).convert_to<long>() + 1;
    if (want > static_cast<long>(out.coeffs_.size())) out.coeffs_.resize(static_cast<std::size_t>(want), zero<T>());
    return out;
  }

  /// j-th derivative evaluated at x > 0, in double precision (Horner).
  double evaluate(double x, int derivative = 0) const {
    if (coeffs_.empty()) return 0.0;
    double acc = 0.0;
    const double b = to_double(base_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      double f = 1.0;
      for (int i = 0; i < derivative; ++i) f *= b + static_cast<double>(k) - i;
      acc = acc * x + f * to_double(coeffs_[k]);
    }
    const Rational shift = base_ - derivative;
    if (shift == 0) return acc;
    if (is_integer(shift)) return acc * std::pow(x, numerator(shift).template convert_to<int>());
    return acc * std::pow(x, to_double(shift));
  }

  PowerSeries& operator+=(const PowerSeries& o) { return accumulate(o, false); }
  PowerSeries& operator-=(const PowerSeries& o) { return accumulate(o, true); }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(PowerSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend PowerSeries operator*(const T& s, PowerSeries a) {
    for (auto& c : a.coeffs_) c = s * c;
    a.normalize();
    return a;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    // trailing zeros do not change the represented value
    const std::size_t n = std::max(a.size(), b.size());
    if (a.base_ != b.base_) return false;
    for (std::size_t i = 0; i < n; ++i) {
      const T ca = i < a.size() ? a.coeffs_[i] : zero<T>();
      const T cb = i < b.size() ? b.coeffs_[i] : zero<T>();
      if (!(ca == cb)) return false;
    }
    return true;
  }

 private:
  PowerSeries& accumulate(const PowerSeries& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const Rational diff = o.base_ - base_;
    if (!is_integer(diff))
      throw std::invalid_argument("power series on incompatible exponent lattices");
    const long shift = numerator(diff).template convert_to<long>();
    const long lo = std::min(0L, shift);
    const long hi = std::max(static_cast<long>(coeffs_.size()), shift + static_cast<long>(o.coeffs_.size()));
    std::vector<T> out(static_cast<std::size_t>(hi - lo), zero<T>());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(static_cast<long>(i) - lo)] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(static_cast<long>(i) + shift - lo)];
      if (subtract) slot = slot - o.coeffs_[i];
      else slot = slot + o.coeffs_[i];
    }
    base_ = base_ + lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && harmonium::is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      base_ += static_cast<long>(lead);
    }
  }

  Rational base_{0};
  std::vector<T> coeffs_;
};

/// F(D) as a polynomial in the Euler symbol with rational coefficients.
class EulerPolynomial {
 public:
  /// Coefficients lowest power of D first; degree must be at least one.
  explicit EulerPolynomial(std::vector<Rational> coeffs);

  /// prod_i (D - root_i)
  static EulerPolynomial from_roots(const std::vector<Rational>& roots);

  Rational operator()(const Rational& s) const { return poly_.evaluate(s); }
  int degree() const { return poly_.degree(); }
  const Polynomial<Rational>& polynomial() const { return poly_; }

 private:
  Polynomial<Rational> poly_;
};

/// c * x^k * (d/dx)^j
template <class T>
struct MonomialTerm {
  T coeff;
  int power_shift;
  int derivative_order;
};

/// Finite sum of MonomialTerm. Maps x^s to sum c s(s-1)...(s-j+1) x^{s+k-j}.
template <class T>
class MonomialOperator {
 public:
  MonomialOperator() = default;
  explicit MonomialOperator(std::vector<MonomialTerm<T>> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.derivative_order < 0) throw std::invalid_argument("negative derivative order");
  }

  MonomialOperator& add(T coeff, int power_shift, int derivative_order) {
    if (derivative_order < 0) throw std::invalid_argument("negative derivative order");
    terms_.push_back({std::move(coeff), power_shift, derivative_order});
    return *this;
  }

  std::span<const MonomialTerm<T>> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// min over terms of (k - j); nullopt for the empty operator.
  std::optional<int> net_degree_shift() const {
    if (terms_.empty()) return std::nullopt;
    int lo = terms_.front().power_shift - terms_.front().derivative_order;
    for (const auto& t : terms_) lo = std::min(lo, t.power_shift - t.derivative_order);
    return lo;
  }

  int max_degree_shift() const {
    int hi = terms_.front().power_shift - terms_.front().derivative_order;
    for (const auto& t : terms_) hi = std::max(hi, t.power_shift - t.derivative_order);
    return hi;
  }

 private:
  std::vector<MonomialTerm<T>> terms_;
};

/// Rational roots of F (descending, with multiplicity) and the remaining real
/// roots as approximations.
struct IndicialRoots {
  std::vector<Rational> rational;
  std::vector<double> irrational;
};

IndicialRoots indicial_roots(const EulerPolynomial& F);

template <class T>
PowerSeries<T> apply_operator(const MonomialOperator<T>& P, const PowerSeries<T>& y) {
  if (P.empty() || y.is_zero()) return {};
  const int lo = *P.net_degree_shift();
  const int hi = P.max_degree_shift();
  std::vector<T> out(y.size() + static_cast<std::size_t>(hi - lo), zero<T>());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (harmonium::is_zero(y.coeffs()[i])) continue;
    const Rational s = y.base_exponent() + static_cast<long>(i);
    for (const auto& term : P.terms()) {
      const Rational ff = falling_factorial(s, term.derivative_order);
      if (ff.is_zero()) continue;
      const long idx = static_cast<long>(i) + term.power_shift - term.derivative_order - lo;
      auto& slot = out[static_cast<std::size_t>(idx)];
      slot = slot + term.coeff * (from_rational<T>(ff) * y.coeffs()[i]);
    }
  }
  return PowerSeries<T>(y.base_exponent() + lo, std::move(out));
}

/// Apply F(D): the coefficient at exponent s is multiplied by F(s).
template <class T>
PowerSeries<T> apply_euler(const EulerPolynomial& F, const PowerSeries<T>& y) {
  std::vector<T> out = y.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = from_rational<T>(F(y.base_exponent() + static_cast<long>(i))) * out[i];
  return PowerSeries<T>(y.base_exponent(), std::move(out));
}

/// Apply F(D)^{-1}: the coefficient at exponent s is divided by F(s).
template <class T>
PowerSeries<T> invert_euler(const EulerPolynomial& F, const PowerSeries<T>& y) {
  std::vector<T> out = y.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rational s = y.base_exponent() + static_cast<long>(i);
    const Rational f = F(s);
    if (f.is_zero()) {
      if (!harmonium::is_zero(out[i]))
        throw ResonanceError("resonant exponent " + to_string(s) + " in Euler inversion");
      continue;
    }
    out[i] = from_rational<T>(Rational(1) / f) * out[i];
  }
  return PowerSeries<T>(y.base_exponent(), std::move(out));
}

/// Truncated operator series for [F(D) + P] y = 0 starting at x^lambda with
/// unit leading coefficient. Every exponent up to lambda + N is exact.
template <class T>
PowerSeries<T> series_solve(const EulerPolynomial& F, const MonomialOperator<T>& P, const Rational& lambda,
                            int N) {
  if (N < 0) throw std::invalid_argument("series_solve: truncation order must be nonnegative");
  if (!F(lambda).is_zero()) throw std::invalid_argument("series_solve: lambda is not an indicial root");
  const Rational limit = lambda + N;
  PowerSeries<T> term = PowerSeries<T>::monomial(lambda, one<T>());
  if (P.empty()) return term.padded_to(limit);
  if (*P.net_degree_shift() < 1)
    throw std::invalid_argument("series_solve: operator must raise the degree (net shift >= 1)");
  PowerSeries<T> sum = term;
  for (;;) {
    PowerSeries<T> next = apply_operator(P, term).truncated(limit);
    if (next.is_zero()) break;
    term = -invert_euler(F, next);
    sum += term;
  }
  return sum.padded_to(limit);
}

/// Pointwise values of (L y)(x), each term evaluated as c x^k y^{(j)}(x).
template <class T>
std::vector<double> operator_values(const MonomialOperator<T>& L, const PowerSeries<T>& y,
                                    std::span<const double> grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) {
    double acc = 0.0;
    for (const auto& term : L.terms())
      acc += to_double(term.coeff) * std::pow(x, term.power_shift) * y.evaluate(x, term.derivative_order);
    out.push_back(acc);
  }
  return out;
}

/// max |(L y)(x)| / max(1, max |y(x)|) over a grid of positive points.
template <class T>
double residual(const MonomialOperator<T>& L, const PowerSeries<T>& y, std::span<const double> grid) {
  double worst = 0.0;
  double scale = 1.0;
  const auto values = operator_values(L, y, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("residual: grid points must be positive");
    worst = std::max(worst, std::abs(values[i]));
    scale = std::max(scale, std::abs(y.evaluate(grid[i])));
  }
  return worst / scale;
}

/// Convert coefficients into another ring (e.g. extended precision to double).
template <class To, class From, class Fn>
PowerSeries<To> convert(const PowerSeries<From>& y, Fn fn) {
  std::vector<To> c;
  c.reserve(y.size());
  for (const auto& x : y.coeffs()) c.push_back(fn(x));
  return PowerSeries<To>(y.base_exponent(), std::move(c));
}

}  // namespace harmonium::series
