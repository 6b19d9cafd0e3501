#include "harmonium/qes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "harmonium/errors.hpp"
#include "harmonium/roots.hpp"

namespace harmonium::qes {

double SexticParams::sqrt_gamma() const {
  if (!(gamma > 0)) throw std::invalid_argument("sextic coupling gamma must be positive");
  return std::sqrt(gamma);
}

double SexticParams::A() const { return 0.5 * alpha + 0.5 * to_double(Rational(2 * m + 5)) * sqrt_gamma(); }

series::MonomialOperator<double> reduced_qes_operator(const SexticParams& p) {
  series::MonomialOperator<double> op;
  op.add(-0.5, 0, 2);
  op.add(p.sqrt_gamma(), 3, 1);
  op.add(p.A(), 2, 0);
  op.add(-to_double(Rational(p.m + 1)), -1, 1);
  return op;
}

series::MonomialOperator<double> sextic_operator(const SexticParams& p) {
  series::MonomialOperator<double> op;
  op.add(-0.5, 0, 2);
  op.add(0.5 * to_double(Rational(p.m * (p.m + 1))), -2, 0);
  op.add(0.5 * p.alpha, 2, 0);
  op.add(0.5 * p.gamma, 6, 0);
  return op;
}

series::EulerPolynomial qes_euler(const SexticParams& p) {
  return series::EulerPolynomial({Rational(0), Rational(2 * p.m + 1), Rational(1)});
}

series::PowerSeries<double> qes_series(double E, const SexticParams& p, int N, SeriesForm form) {
  if (N < 2) throw std::invalid_argument("qes_series: N must be >= 2");
  return series::series_solve(qes_euler(p), qes_p<double>(E, p.A(), p.sqrt_gamma(), form), Rational(0), N);
}

series::PowerSeries<ExtReal> qes_series_ext(const ExtReal& E, const SexticParams& p, int N, SeriesForm form) {
  if (N < 2) throw std::invalid_argument("qes_series: N must be >= 2");
  const ExtReal sg = sqrt(ExtReal(p.gamma));
  const ExtReal A = ExtReal(p.alpha) / 2 + ExtReal(Rational(2 * p.m + 5)) * sg / 2;
  return series::series_solve(qes_euler(p), qes_p<ExtReal>(E, A, sg, form), Rational(0), N);
}

double qes_condition(int n, const Rational& m, double gamma) {
  if (n < 0) throw std::invalid_argument("qes_condition: n must be >= 0");
  if (!(gamma > 0)) throw std::invalid_argument("qes_condition: gamma must be positive");
  return -std::sqrt(gamma) * to_double(Rational(2 * n + 2 * m + 5));
}

double condition_residual(const SexticParams& p, int n) { return p.A() + n * p.sqrt_gamma(); }

std::vector<double> exact_energies(const SexticParams& p, int n) {
  if (n < 0 || n % 2 != 0) return {};
  const double sg = p.sqrt_gamma();
  if (std::abs(condition_residual(p, n)) > 1e-10 * std::max(1.0, sg)) {
    std::ostringstream os;
    os << "parameters do not satisfy the polynomial condition for n = " << n;
    throw InconsistentParams(os.str());
  }
  const int k_end = n / 2 + 1;
  // c_k as polynomials in E:
  // 2k(2k + 2m + 1) c_k = -2E c_{k-1} + (2A + 4(k-2) sqrt(gamma)) c_{k-2}
  const Rational A = exact_rational(-n * sg);
  const Rational s = exact_rational(sg);
  const Polynomial<Rational> E{Rational(0), Rational(1)};
  std::vector<Polynomial<Rational>> c{Polynomial<Rational>{Rational(1)}};
  for (int k = 1; k <= k_end; ++k) {
    Polynomial<Rational> rhs = -(E * c[static_cast<std::size_t>(k - 1)]).scaled(Rational(2));
    if (k >= 2) rhs += c[static_cast<std::size_t>(k - 2)].scaled(2 * A + 4 * (k - 2) * s);
    c.push_back(rhs.scaled(Rational(1) / (Rational(2 * k) * (2 * k + 2 * p.m + 1))));
  }
  std::vector<double> out;
  for (const auto& r : roots::real_roots(c.back())) out.push_back(r.value);
  return out;
}

HookeEquivalence map_to_hooke(const SexticParams& p, double E) {
  return {0.5 * p.sqrt_gamma(), -0.5 * E, -p.alpha / 8.0, Rational(2 * p.m + 1) / 4};
}

SexticMapping map_from_hooke(const HookeEquivalence& h) {
  SexticMapping out;
  out.params.gamma = 4.0 * h.omega * h.omega;
  out.params.alpha = -8.0 * h.eps_rel;
  out.params.m = (4 * h.m_tilde - 1) / 2;
  out.E = -2.0 * h.Z;
  out.integer_m = is_integer(out.params.m);
  out.n_qes = 0;
  return out;
}

SexticMapping map_from_hooke(const hooke::QuantizationBranch& b) {
  auto out = map_from_hooke(HookeEquivalence{b.omega, b.Z, b.eps_rel, b.m});
  out.n_qes = 2 * (b.n - 1);
  return out;
}

series::PowerSeries<double> mapped_prefactor(const series::PowerSeries<double>& f, const SexticParams& p) {
  if (!is_integer(f.base_exponent()) || boost::multiprecision::numerator(f.base_exponent()) % 2 != 0)
    throw std::invalid_argument("mapped_prefactor: series must be even in x");
  std::vector<double> c;
  const auto& fc = f.coeffs();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (i % 2 == 1) {
      if (fc[i] != 0.0) throw std::invalid_argument("mapped_prefactor: series must be even in x");
      continue;
    }
    c.push_back(fc[i]);
  }
  return series::PowerSeries<double>(Rational(2 * p.m + 3) / 4 + f.base_exponent() / 2, c);
}

double mapped_residual(const SexticParams& p, double E, const series::PowerSeries<double>& f,
                       std::span<const double> r_grid) {
  const auto h = map_to_hooke(p, E);
  const auto params = hooke::HookeParams::with_omega_tilde(h.Z, h.m_tilde, h.omega);
  const auto op = hooke::conjugated_radial_operator(params, h.omega, h.eps_rel);
  const auto v = mapped_prefactor(f, p);
  const auto values = series::operator_values(op, v, r_grid);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double g = std::exp(-0.5 * h.omega * r_grid[i] * r_grid[i]);
    worst = std::max(worst, std::abs(g * values[i]));
    scale = std::max(scale, std::abs(g * v.evaluate(r_grid[i])));
  }
  return scale > 0.0 ? worst / scale : worst;
}

double qes_residual(const SexticParams& p, double E, const series::PowerSeries<double>& f,
                    std::span<const double> x_grid) {
  auto op = reduced_qes_operator(p);
  op.add(-E, 0, 0);
  return series::residual(op, f, x_grid);
}

}  // namespace harmonium::qes
