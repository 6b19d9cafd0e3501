#include "harmonium/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "harmonium/roots.hpp"

namespace harmonium::series {
namespace {

using boost::multiprecision::mpz_int;

std::vector<mpz_int> divisors(mpz_int n) {
  if (n < 0) n = -n;
  std::vector<mpz_int> small;
  std::vector<mpz_int> large;
  for (mpz_int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

EulerPolynomial::EulerPolynomial(std::vector<Rational> coeffs) : poly_(std::move(coeffs)) {
  if (poly_.degree() < 1) throw std::invalid_argument("Euler polynomial must have degree >= 1");
}

EulerPolynomial EulerPolynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial<Rational> p{Rational(1)};
  for (const auto& r : roots) p *= Polynomial<Rational>{-r, Rational(1)};
  return EulerPolynomial(p.coeffs());
}

IndicialRoots indicial_roots(const EulerPolynomial& F) {
  IndicialRoots out;
  Polynomial<Rational> p = F.polynomial();

  while (p.degree() > 0 && p[0].is_zero()) {
    out.rational.push_back(Rational(0));
    p = Polynomial<Rational>(std::vector<Rational>(p.coeffs().begin() + 1, p.coeffs().end()));
  }

  // rational root theorem on the integer multiple of p
  auto integer_coeffs = [](const Polynomial<Rational>& q) {
    mpz_int l = 1;
    for (const auto& c : q.coeffs()) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    std::vector<mpz_int> z;
    for (const auto& c : q.coeffs()) z.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
    return z;
  };

  bool found = true;
  while (found && p.degree() > 0) {
    found = false;
    const auto z = integer_coeffs(p);
    for (const auto& num : divisors(z.front())) {
      for (const auto& den : divisors(z.back())) {
        for (int sgn : {1, -1}) {
          const Rational cand = Rational(num * sgn, den);
          if (!p.evaluate(cand).is_zero()) continue;
          out.rational.push_back(cand);
          p = p.divmod(Polynomial<Rational>{-cand, Rational(1)}).first;
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }

  std::sort(out.rational.begin(), out.rational.end(), std::greater<>());
  if (p.degree() > 0)
    for (const auto& r : roots::real_roots_ext(p)) out.irrational.push_back(to_double(r));
  return out;
}

}  // namespace harmonium::series
