#include "harmonium/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harmonium::roots {
namespace {

using boost::multiprecision::mpz_int;

int sign_of(const Rational& x) { return x.sign(); }

// Parlett-Reinsch balancing, row/column norms scaled by powers of two.
void balance(Eigen::MatrixXd& m) {
  const double gamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double row = m.row(i).lpNorm<1>();
      const double col = m.col(i).lpNorm<1>();
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < gamma * (col + row)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}


int variations(const std::vector<Polynomial<Rational>>& seq, const std::optional<Rational>& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = 0;
    if (x) {
      s = sign_of(p.evaluate(*x));
    } else {
      s = sign_of(p.leading());
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const mpz_int num = boost::multiprecision::numerator(r);
  const mpz_int den = boost::multiprecision::denominator(r);
  const mpz_int sn = boost::multiprecision::sqrt(num);
  const mpz_int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  const int degree = static_cast<int>(c.size()) - 1;
  if (degree < 1) return {};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(degree, degree);
  if (degree > 1) m.diagonal(-1).setOnes();
  for (int i = 0; i < degree; ++i) m(i, degree - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  balance(m);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  const auto ev = solver.eigenvalues();
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) out.push_back(ev(i));
  return out;
}

ExtReal newton_polish(const Polynomial<Rational>& p, ExtReal x, int max_iter) {
  std::vector<ExtReal> c;
  for (const auto& q : p.coeffs()) c.push_back(ExtReal(q));
  const ExtReal eps = std::numeric_limits<ExtReal>::epsilon() * 16;
  for (int it = 0; it < max_iter; ++it) {
    ExtReal f = 0;
    ExtReal df = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
      df = df * x + f;
      f = f * x + c[k];
    }
    if (df == 0) break;
    const ExtReal step = f / df;
    x -= step;
    if (abs(step) <= eps * (1 + abs(x))) break;
  }
  return x;
}

std::vector<ExtReal> real_roots_ext(const Polynomial<Rational>& p, double imag_tol) {
  std::vector<ExtReal> out;
  const int d = p.degree();
  if (d < 1) return out;
  if (d == 1) {
    out.push_back(ExtReal(Rational(-p[0] / p[1])));
    return out;
  }
  if (d == 2) {
    const Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
    if (disc < 0) return out;
    const ExtReal a(p[2]);
    const ExtReal b(p[1]);
    const ExtReal c(p[0]);
    const ExtReal sq = sqrt(ExtReal(disc));
    // numerically stable pair
    const ExtReal q = b >= 0 ? ExtReal(-(b + sq) / 2) : ExtReal(-(b - sq) / 2);
    if (q == 0) {
      out.push_back(ExtReal(0));
      out.push_back(ExtReal(0));
    } else {
      out.push_back(q / a);
      out.push_back(c / q);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<double> approx;
  for (const auto& q : p.coeffs()) approx.push_back(to_double(q));
  for (const auto& z : companion_roots(approx)) {
    if (std::abs(z.imag()) >= imag_tol) continue;
    out.push_back(newton_polish(p, ExtReal(z.real())));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RealRoot> real_roots(const Polynomial<Rational>& p, double imag_tol) {
  std::vector<RealRoot> out;
  const int d = p.degree();
  if (d == 1) {
    const Rational r = -p[0] / p[1];
    out.push_back({to_double(r), r});
    return out;
  }
  if (d == 2) {
    const Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
    if (auto sq = rational_sqrt(disc)) {
      const Rational r1 = (-p[1] - *sq) / (2 * p[2]);
      const Rational r2 = (-p[1] + *sq) / (2 * p[2]);
      out.push_back({to_double(r1), r1});
      out.push_back({to_double(r2), r2});
      std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
      return out;
    }
  }
  for (const auto& r : real_roots_ext(p, imag_tol)) out.push_back({to_double(r), std::nullopt});
  return out;
}

int sturm_count(const Polynomial<Rational>& p_in, const Rational& a, const std::optional<Rational>& b) {
  if (p_in.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (b && *b <= a) return 0;
  Polynomial<Rational> p = p_in;
  // roots sitting on the left end are not in the open interval
  while (p.degree() > 0 && p.evaluate(a).is_zero()) p = p.divmod(Polynomial<Rational>{-a, Rational(1)}).first;
  if (p.degree() < 1) return 0;

  std::vector<Polynomial<Rational>> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto rem = seq[seq.size() - 2].divmod(seq.back()).second;
    if (rem.is_zero()) break;
    // keep coefficient growth in check: only the sign pattern matters
    const Rational lead = abs(rem.leading());
    seq.push_back(-rem.scaled(Rational(1) / lead));
  }
  int count = variations(seq, a) - variations(seq, b);
  if (b && p.evaluate(*b).is_zero()) count -= 1;
  return count;
}

}  // namespace harmonium::roots
