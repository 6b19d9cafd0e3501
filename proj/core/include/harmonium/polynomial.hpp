#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "harmonium/numeric.hpp"

namespace harmonium {

/// Dense univariate polynomial, coefficients stored lowest power first.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int power, T coeff = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(power) + 1, T(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T operator[](int power) const {
    if (power < 0 || power > degree()) return T(0);
    return coeffs_[static_cast<std::size_t>(power)];
  }

  const T& leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() < 2) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial scaled(const T& s) const {
    std::vector<T> c = coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  /// Euclidean division over a field: *this = q * divisor + r, deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial{}, *this};
    std::vector<T> quot(static_cast<std::size_t>(degree() - dd + 1), T(0));
    const T& lead = divisor.leading();
    for (int k = degree() - dd; k >= 0; --k) {
      T q = rem[static_cast<std::size_t>(k + dd)] / lead;
      quot[static_cast<std::size_t>(k)] = q;
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == T(0)) continue;
      if (!first) os << " + ";
      os << "(" << coeffs_[i] << ")";
      if (i > 0) os << "*" << var << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Polynomial in a formal symbol (used for kappa) over the rationals.
using SymbolicPoly = Polynomial<Rational>;

template <class T>
bool is_zero(const Polynomial<T>& p) {
  return p.is_zero();
}

template <>
struct FromRational<SymbolicPoly> {
  static SymbolicPoly convert(const Rational& r) { return SymbolicPoly{r}; }
};

}  // namespace harmonium
