#include "harmonium/hooke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "harmonium/errors.hpp"
#include "harmonium/quadrature.hpp"
#include "harmonium/roots.hpp"

namespace harmonium::hooke {
namespace {

std::string triple(int n, const Rational& m, double Z) {
  std::ostringstream os;
  os << "(n=" << n << ", m=" << m << ", Z=" << Z << ")";
  return os.str();
}

}  // namespace

double HookeParams::omega_tilde() const {
  return 0.5 * std::sqrt(omega_larmor * omega_larmor + omega0 * omega0);
}

HookeParams HookeParams::with_omega_tilde(double Z, const Rational& m, double w, double omega_larmor) {
  HookeParams p;
  p.Z = Z;
  p.m = m;
  p.omega_larmor = omega_larmor;
  p.omega0 = std::sqrt(std::max(0.0, 4.0 * w * w - omega_larmor * omega_larmor));
  return p;
}

series::MonomialOperator<double> radial_operator(const HookeParams& params) {
  const double w = params.omega_tilde();
  const double centrifugal = 0.5 * to_double(Rational(params.m * params.m - Rational(1, 4)));
  series::MonomialOperator<double> op;
  op.add(-0.5, 0, 2);
  op.add(centrifugal, -2, 0);
  op.add(0.5 * w * w, 2, 0);
  op.add(0.5 * params.Z, -1, 0);
  return op;
}

series::MonomialOperator<double> conjugated_radial_operator(const HookeParams& params, double gauss, double eps) {
  const double w = params.omega_tilde();
  const double centrifugal = 0.5 * to_double(Rational(params.m * params.m - Rational(1, 4)));
  series::MonomialOperator<double> op;
  op.add(-0.5, 0, 2);
  op.add(gauss, 1, 1);
  op.add(0.5 * gauss - eps, 0, 0);
  op.add(0.5 * (w * w - gauss * gauss), 2, 0);
  op.add(centrifugal, -2, 0);
  op.add(0.5 * params.Z, -1, 0);
  return op;
}

series::EulerPolynomial hooke_euler(const Rational& m) {
  return series::EulerPolynomial({Rational(0), Rational(2 * abs(m)), Rational(1)});
}

Polynomial<Rational> quantization_polynomial(int n, const Rational& m) {
  if (n < 1) throw std::invalid_argument("quantization_polynomial: n must be >= 1");
  const SymbolicPoly kappa{Rational(0), Rational(1)};
  return coefficient_recurrence<SymbolicPoly>(kappa, n, m)[static_cast<std::size_t>(n)];
}

std::vector<QuantizationBranch> solve_frequencies(int n, const Rational& m, double Z) {
  if (Z == 0.0) throw NoBranchError("no Coulomb branch for Z = 0 " + triple(n, m, Z) + "; use the oscillator branch");
  if (n < 1) throw std::invalid_argument("solve_frequencies: n must be >= 1");
  const Rational M = abs(m);
  const auto a_n = quantization_polynomial(n, m);
  // a_n has the parity of n; work in s = kappa^2 and drop the kappa = 0 root for odd n
  std::vector<Rational> q;
  for (int k = n % 2; k <= a_n.degree(); k += 2) q.push_back(a_n[k]);
  const Polynomial<Rational> qs(q);

  const Rational z_exact = exact_rational(Z);
  const ExtReal z_ext(z_exact);
  std::vector<QuantizationBranch> out;
  auto push = [&](const ExtReal& s, const std::optional<Rational>& s_exact) {
    QuantizationBranch b;
    b.n = n;
    b.m = m;
    b.Z = Z;
    const ExtReal kappa = (Z > 0 ? 1 : -1) * sqrt(s);
    const ExtReal omega = z_ext * z_ext / s;
    b.kappa = to_double(kappa);
    b.omega = to_double(omega);
    b.eps_prime = 2.0 * to_double(Rational(n + M));
    b.eps_rel = to_double(ExtReal(omega * ExtReal(Rational(n + M))));
    if (s_exact) {
      b.kappa_sq_exact = *s_exact;
      b.omega_exact = z_exact * z_exact / *s_exact;
    }
    out.push_back(b);
  };

  if (qs.degree() <= 2) {
    for (const auto& r : roots::real_roots(qs)) {
      if (r.exact) {
        if (*r.exact > 0) push(ExtReal(*r.exact), r.exact);
      } else if (r.value > 0) {
        push(roots::newton_polish(qs, ExtReal(r.value)), std::nullopt);
      }
    }
  } else {
    for (const auto& s : roots::real_roots_ext(qs))
      if (s > 0) push(s, std::nullopt);
  }
  if (out.empty()) throw NoBranchError("no real sign-compatible root of the quantization polynomial " + triple(n, m, Z));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.omega > b.omega; });
  return out;
}

QuantizationBranch oscillator_branch(int n, const Rational& m, double omega) {
  if (n < 1 || n % 2 == 0)
    throw NoBranchError("Coulomb-free states need odd n " + triple(n, m, 0.0));
  if (!(omega > 0)) throw std::invalid_argument("oscillator_branch: omega must be positive");
  QuantizationBranch b;
  b.n = n;
  b.m = m;
  b.Z = 0.0;
  b.kappa = 0.0;
  b.omega = omega;
  const Rational M = abs(m);
  b.eps_prime = 2.0 * to_double(Rational(n + M));
  b.eps_rel = omega * to_double(Rational(n + M));
  b.kappa_sq_exact = Rational(0);
  return b;
}

QuantizationBranch make_branch(int n, const Rational& m, double Z, double omega_for_z0, std::size_t index) {
  if (Z == 0.0) return oscillator_branch(n, m, omega_for_z0);
  const auto branches = solve_frequencies(n, m, Z);
  if (index >= branches.size()) throw NoBranchError("branch index out of range " + triple(n, m, Z));
  return branches[index];
}

RadialWavefunction RadialWavefunction::build(const QuantizationBranch& b) {
  RadialWavefunction wf;
  wf.branch_ = b;
  const Rational M = abs(b.m);
  const double Md = to_double(M);
  const double w = b.omega;

  // coefficients in 50 digits; the branch kappa is only known to double precision
  const ExtReal kappa(b.kappa);
  const auto a = coefficient_recurrence<ExtReal>(kappa, b.n, b.m);
  std::vector<double> t_rho;
  std::vector<double> t_r;
  const ExtReal sw = sqrt(ExtReal(w));
  ExtReal scale = 1;
  for (int j = 0; j < b.n; ++j) {
    t_rho.push_back(to_double(a[static_cast<std::size_t>(j)]));
    t_r.push_back(to_double(ExtReal(a[static_cast<std::size_t>(j)] * scale)));
    scale *= sw;
  }
  wf.t_rho_ = series::PowerSeries<double>(Rational(0), t_rho);
  wf.t_r_ = series::PowerSeries<double>(Rational(0), t_r);
  wf.v_r_ = series::PowerSeries<double>(M + Rational(1, 2), t_r);

  const double rho_max = 6.0 + 1.5 * std::sqrt(2.0 * Md + 2.0 * b.n + 1.0);
  wf.r_max_ = rho_max / std::sqrt(w);

  std::vector<Rational> exact_t;
  for (double c : t_r) exact_t.push_back(exact_rational(c));
  const Polynomial<Rational> tp(exact_t);
  wf.nodes_ = tp.degree() > 0 ? roots::sturm_count(tp, Rational(0), std::nullopt) : 0;
  for (const auto& r : roots::real_roots_ext(tp))
    if (r > 0) wf.node_r_.push_back(to_double(r));

  const auto& tr = wf.t_rho_;
  auto integrand = [&](double rho) {
    const double t = tr.evaluate(rho);
    return std::exp(-rho * rho) * std::pow(rho, 2.0 * Md + 1.0) * t * t;
  };
  std::vector<double> pieces{0.0};
  for (double x : wf.node_r_) pieces.push_back(x * std::sqrt(w));
  pieces.push_back(rho_max);
  std::sort(pieces.begin(), pieces.end());
  QuadratureOptions opts;
  opts.rel_tol = 1e-11;
  opts.abs_tol = 1e-300;
  const double i_rho = integrate_pieces(integrand, pieces, opts).value;
  wf.norm_ = std::sqrt(std::pow(w, Md + 1.0) / i_rho);
  return wf;
}

double RadialWavefunction::u(double r) const {
  return norm_ * std::exp(-0.5 * branch_.omega * r * r) * v_r_.evaluate(r);
}

double RadialWavefunction::log_u2(double r) const {
  const double t = t_r_.evaluate(r);
  const double M = to_double(abs(branch_.m));
  return 2.0 * std::log(norm_) - branch_.omega * r * r + (2.0 * M + 1.0) * std::log(r) + 2.0 * std::log(std::abs(t));
}

Energies energies(const QuantizationBranch& b, const HookeParams& params, int cm_quanta) {
  if (cm_quanta < 0) throw std::invalid_argument("energies: cm_quanta must be >= 0");
  const double w = params.omega_tilde();
  if (std::abs(w - b.omega) > 1e-12 * std::max(1.0, b.omega)) {
    std::ostringstream os;
    os.precision(17);
    os << "parameters give omega_tilde = " << w << " but the branch has " << b.omega;
    throw InconsistentParams(os.str());
  }
  Energies e{};
  e.eps_rel = b.eps_rel;
  e.eps = b.eps_rel + 0.5 * to_double(b.m) * params.omega_larmor;
  e.total = 2.0 * e.eps + params.omega0 * (cm_quanta + 1);
  e.eps_doubled = 2.0 * b.eps_rel;
  return e;
}

double verify_branch(const RadialWavefunction& wf, const HookeParams& params, std::span<const double> grid) {
  const auto& b = wf.branch();
  const auto op = conjugated_radial_operator(params, b.omega, b.eps_rel);
  const auto values = series::operator_values(op, wf.prefactor_series(), grid);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("verify_branch: grid points must be positive");
    const double g = wf.norm() * std::exp(-0.5 * b.omega * grid[i] * grid[i]);
    worst = std::max(worst, std::abs(g * values[i]));
    scale = std::max(scale, std::abs(wf.u(grid[i])));
  }
  return scale > 0.0 ? worst / scale : worst;
}

double CenterOfMassState::density(double R) const { return beta / std::numbers::pi * std::exp(-beta * R * R); }

CenterOfMassState CenterOfMassState::physical(const QuantizationBranch& b) { return {4.0 * b.omega}; }

CenterOfMassState CenterOfMassState::matched(const QuantizationBranch& b) { return {b.omega}; }

}  // namespace harmonium::hooke
