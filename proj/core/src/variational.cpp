#include "harmonium/variational.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "harmonium/errors.hpp"
#include "harmonium/quadrature.hpp"
#include "harmonium/roots.hpp"

namespace harmonium::qes {
namespace {

constexpr double kTail = 41.446531673892822;  // 18 ln 10

series::PowerSeries<double> to_double_series(const series::PowerSeries<ExtReal>& s) {
  return series::convert<double>(s, [](const ExtReal& x) { return to_double(x); });
}

// Weighted L2 data of a trial function: returns (int w g^2, int w f^2).
template <class G, class F, class W>
std::pair<double, double> weighted_norms(G g, F f, W w, double hi) {
  const QuadratureOptions opts{1e-300, 1e-11, 18};
  const double num = integrate([&](double x) { const double v = g(x); return w(x) * v * v; }, 0.0, hi, opts).value;
  const double den = integrate([&](double x) { const double v = f(x); return w(x) * v * v; }, 0.0, hi, opts).value;
  return {num, den};
}

struct Scan {
  std::vector<double> E;
  std::vector<double> R;
  std::vector<int> nodes;
};

template <class Eval>
std::pair<double, std::size_t> scan_and_refine(Eval eval, int target_nodes, std::pair<double, double> bracket,
                                               const VariationalOptions& opts, Scan& scan) {
  const auto [lo, hi] = bracket;
  if (!(hi > lo)) throw BracketError("empty energy bracket");
  const int pts = std::max(opts.scan_points, 3);
  for (int i = 0; i < pts; ++i) {
    const double E = lo + (hi - lo) * i / (pts - 1);
    const auto [R, nodes] = eval(E);
    scan.E.push_back(E);
    scan.R.push_back(R);
    scan.nodes.push_back(nodes);
  }
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < scan.E.size(); ++i) {
    if (scan.nodes[i] != target_nodes) continue;
    if (!best || scan.R[i] < scan.R[*best]) best = i;
  }
  if (!best) {
    std::ostringstream os;
    os << "no energy in [" << lo << ", " << hi << "] gives " << target_nodes << " nodes";
    throw NodeCountUnreachable(os.str());
  }
  const std::size_t i = *best;
  const double a = scan.E[i == 0 ? 0 : i - 1];
  const double b = scan.E[std::min(i + 1, scan.E.size() - 1)];
  const auto [x, fx] = minimize_scalar([&](double E) { return eval(E).first; }, a, b, opts.tolerance);
  const double edge = 4.0 * opts.tolerance;
  if ((i == 0 && x - lo < edge) || (i + 1 == scan.E.size() && hi - x < edge))
    throw BracketError("the residual functional has no interior minimum in the bracket");
  (void)fx;
  return {x, i};
}

}  // namespace

double x_max(const SexticParams& p) { return std::pow(2.0 * kTail / p.sqrt_gamma(), 0.25); }

int node_count(const series::PowerSeries<double>& f, double x_hi) {
  if (f.is_zero()) return 0;
  const auto& c = f.coeffs();
  const bool even = is_integer(f.base_exponent()) &&
                    boost::multiprecision::numerator(f.base_exponent()) % 2 == 0 &&
                    std::all_of(c.begin(), c.end(), [&, i = std::size_t{0}](double v) mutable { return (i++ % 2 == 0) || v == 0.0; });
  std::vector<Rational> q;
  if (even) {
    for (std::size_t i = 0; i < c.size(); i += 2) q.push_back(exact_rational(c[i]));
    const Polynomial<Rational> poly(q);
    if (poly.degree() < 1) return 0;
    return roots::sturm_count(poly, Rational(0), exact_rational(x_hi * x_hi));
  }
  for (double v : c) q.push_back(exact_rational(v));
  const Polynomial<Rational> poly(q);
  if (poly.degree() < 1) return 0;
  return roots::sturm_count(poly, Rational(0), exact_rational(x_hi));
}

namespace {

struct SexticTrial {
  series::PowerSeries<double> f;
  double R;
  double expectation;
};

SexticTrial sextic_trial(const SexticParams& p, double E, int N, bool need_expectation) {
  SexticTrial t;
  const ExtReal e(E);
  const auto f = qes_series_ext(e, p, N);
  // (H~ - E) f in 50 digits, so the low orders cancel before rounding to double
  const ExtReal sg = sqrt(ExtReal(p.gamma));
  series::MonomialOperator<ExtReal> op;
  op.add(ExtReal(-0.5), 0, 2);
  op.add(sg, 3, 1);
  op.add(ExtReal(p.alpha) / 2 + ExtReal(Rational(2 * p.m + 5)) * sg / 2, 2, 0);
  op.add(-e, 0, 0);
  op.add(-ExtReal(Rational(p.m + 1)), -1, 1);
  t.f = to_double_series(f);
  const auto g = to_double_series(series::apply_operator(op, f));
  const double m1 = to_double(Rational(p.m + 1));
  const double sgd = p.sqrt_gamma();
  auto weight = [&](double x) { return std::pow(x, 2.0 * m1) * std::exp(-0.5 * sgd * x * x * x * x); };
  auto gv = [&](double x) { return g.evaluate(x); };
  auto fv = [&](double x) { return t.f.evaluate(x); };
  const double hi = x_max(p);
  const auto [num, den] = weighted_norms(gv, fv, weight, hi);
  t.R = num / den;
  t.expectation = 0.0;
  if (need_expectation) {
    const QuadratureOptions opts{1e-300, 1e-11, 18};
    const double cross = integrate([&](double x) { return weight(x) * fv(x) * gv(x); }, 0.0, hi, opts).value;
    t.expectation = cross / den;
  }
  return t;
}

}  // namespace

double residual_functional(const SexticParams& p, double E, int N) { return sextic_trial(p, E, N, false).R; }

double expectation_functional(const SexticParams& p, double E, int N) {
  return sextic_trial(p, E, N, true).expectation;
}

VariationalState variational_state(const SexticParams& p, int target_nodes, int N, std::pair<double, double> bracket,
                                   const VariationalOptions& opts) {
  const double hi = x_max(p);
  auto eval = [&](double E) {
    const auto t = sextic_trial(p, E, N, false);
    return std::pair<double, int>{t.R, node_count(t.f, hi)};
  };
  Scan scan;
  const auto [E_star, idx] = scan_and_refine(eval, target_nodes, bracket, opts, scan);
  (void)idx;
  const auto t = sextic_trial(p, E_star, N, false);
  const int nodes = node_count(t.f, hi);
  if (nodes != target_nodes) {
    std::ostringstream os;
    os << "refined energy " << E_star << " has " << nodes << " nodes, wanted " << target_nodes;
    throw NodeCountUnreachable(os.str());
  }
  return {E_star, t.f, nodes, t.R};
}

double expectation_root(const SexticParams& p, int N, std::pair<double, double> bracket) {
  auto f = [&](double E) { return expectation_functional(p, E, N); };
  const double fa = f(bracket.first);
  const double fb = f(bracket.second);
  if (!(fa * fb <= 0.0)) throw BracketError("expectation functional has no sign change in the bracket");
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, bracket.first, bracket.second, fa, fb,
                                                   boost::math::tools::eps_tolerance<double>(45), iters);
  return 0.5 * (r.first + r.second);
}

std::pair<double, double> default_bracket(const SexticParams& p, int n) {
  std::vector<double> levels;
  try {
    levels = exact_energies(p, n);
  } catch (const InconsistentParams&) {
  }
  if (levels.size() >= 2) {
    const double spacing = (levels.back() - levels.front()) / static_cast<double>(levels.size() - 1);
    return {0.0, 3.0 * spacing};
  }
  return {0.0, 3.0 * p.sqrt_gamma()};
}

namespace {

struct HookeTrial {
  series::PowerSeries<double> t_r;
  double R;
  int nodes;
};

HookeTrial hooke_trial(double Z, double omega, const Rational& m, double eps, int N) {
  const Rational M = abs(m);
  const ExtReal w(omega);
  const ExtReal sw = sqrt(w);
  const ExtReal kappa = ExtReal(Z) / sw;
  const ExtReal e_tilde = 2 * ExtReal(eps) / w - 2 * ExtReal(M) - 2;
  const auto a = hooke::recurrence_coefficients<ExtReal>(kappa, e_tilde, m, N + 1);
  std::vector<ExtReal> c;
  ExtReal scale = 1;
  for (const auto& aj : a) {
    c.push_back(aj * scale);
    scale *= sw;
  }
  const series::PowerSeries<ExtReal> v(M + Rational(1, 2), c);
  // exp(w r^2/2) (L - eps) exp(-w r^2/2) at the matching Gaussian
  series::MonomialOperator<ExtReal> op;
  op.add(ExtReal(-0.5), 0, 2);
  op.add(w, 1, 1);
  op.add(w / 2 - ExtReal(eps), 0, 0);
  op.add(ExtReal(Rational(m * m - Rational(1, 4)) / 2), -2, 0);
  op.add(ExtReal(Z) / 2, -1, 0);
  const auto g = to_double_series(series::apply_operator(op, v));
  const auto vd = to_double_series(v);

  HookeTrial t;
  t.t_r = series::PowerSeries<double>(Rational(0), std::vector<double>(vd.coeffs().begin(), vd.coeffs().end()));
  const double hi = std::sqrt(kTail / omega);
  auto gauss = [&](double r) { return std::exp(-omega * r * r); };
  const auto [num, den] = weighted_norms([&](double r) { return g.evaluate(r); }, [&](double r) { return vd.evaluate(r); },
                                         gauss, hi);
  t.R = num / den;
  std::vector<Rational> q;
  for (const auto& x : c) q.push_back(exact_rational(to_double(x)));
  const Polynomial<Rational> poly(q);
  t.nodes = poly.degree() < 1 ? 0 : roots::sturm_count(poly, Rational(0), exact_rational(hi));
  return t;
}

}  // namespace

double hooke_residual_functional(double Z, double omega, const Rational& m, double eps, int N) {
  return hooke_trial(Z, omega, m, eps, N).R;
}

HookeVariationalState hooke_variational_state(double Z, double omega, const Rational& m, int target_nodes, int N,
                                              std::pair<double, double> bracket, const VariationalOptions& opts) {
  auto eval = [&](double eps) {
    const auto t = hooke_trial(Z, omega, m, eps, N);
    return std::pair<double, int>{t.R, t.nodes};
  };
  Scan scan;
  const auto [eps_star, idx] = scan_and_refine(eval, target_nodes, bracket, opts, scan);
  (void)idx;
  // no node check here: far-field roots of the truncated t drift into (0, r_max) near the optimum
  const auto t = hooke_trial(Z, omega, m, eps_star, N);
  return {eps_star, t.t_r, t.nodes, t.R};
}

std::pair<double, double> minimize_scalar(const std::function<double(double)>& f, double a, double b, double tol) {
  // Brent's localmin: golden-section steps, parabolic interpolation when it behaves
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  const double eps = 4.0 * std::numeric_limits<double>::epsilon();
  if (a > b) std::swap(a, b);
  double x = a + golden * (b - a);
  double w = x;
  double v = x;
  double fx = f(x);
  double fw = fx;
  double fv = fx;
  double d = 0.0;
  double e = 0.0;
  for (int it = 0; it < 500; ++it) {
    const double mid = 0.5 * (a + b);
    const double tol1 = eps * std::abs(x) + tol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) break;
    bool golden_step = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = x < mid ? tol1 : -tol1;
        golden_step = false;
      }
    }
    if (golden_step) {
      e = (x < mid ? b : a) - x;
      d = golden * e;
    }
    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x;
      else a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x) a = u;
      else b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return {x, fx};
}

}  // namespace harmonium::qes
