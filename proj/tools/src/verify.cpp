#include "commands.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <iostream>
#include <algorithm>
#include <map>
#include <numbers>
#include <sstream>

#include <harmonium/bessel.hpp>
#include <harmonium/closed_form.hpp>
#include <harmonium/entropy.hpp>
#include <harmonium/errors.hpp>
#include <harmonium/hooke.hpp>
#include <harmonium/io.hpp>
#include <harmonium/observables.hpp>
#include <harmonium/quadrature.hpp>
#include <harmonium/qes.hpp>
#include <harmonium/series.hpp>
#include <harmonium/variational.hpp>

namespace cli {
namespace {

using namespace harmonium;
namespace hk = harmonium::hooke;
namespace obs = harmonium::observables;

struct Outcome {
  bool passed;
  double value;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

Outcome within(double value, double tol, const std::string& what) {
  std::ostringstream os;
  os << what << " = " << io::format_number(value) << " (tolerance " << tol << ")";
  return {std::isfinite(value) && value <= tol, value, os.str()};
}

Outcome flag(bool ok, const std::string& what) { return {ok, ok ? 1.0 : 0.0, what}; }

std::vector<double> linear(double a, double b, int points) {
  return obs::make_grid({a, b, points, obs::Spacing::Linear});
}

double series_oracle(int order, double x) {
  double term = std::pow(0.5 * x, order);
  for (int k = 1; k <= order; ++k) term /= k;
  double sum = term;
  for (int k = 1; k < 30; ++k) {
    term *= 0.25 * x * x / (static_cast<double>(k) * (k + order));
    sum += term;
  }
  return sum;
}

std::vector<Check> battery(double perturb) {
  std::vector<Check> checks;

  checks.push_back({"indicial_roots", [] {
                      const auto r = series::indicial_roots(hk::hooke_euler(Rational(1)));
                      return flag(r.rational == std::vector<Rational>{Rational(0), Rational(-2)} && r.irrational.empty(),
                                  "D(D+2) has roots 0 and -2");
                    }});

  checks.push_back({"resonance_detected", [] {
                      try {
                        series::series_solve(hk::hooke_euler(Rational(1)),
                                             hk::hooke_p<Rational>(Rational(1), Rational(2)), Rational(-2), 4);
                      } catch (const ResonanceError&) {
                        return flag(true, "resonant root rejected");
                      }
                      return flag(false, "resonant root accepted");
                    }});

  checks.push_back({"engine_matches_recurrence", [] {
                      const Rational kappa(3, 2), et(2, 3), m(1);
                      const auto s = series::series_solve(hk::hooke_euler(m), hk::hooke_p(kappa, et), Rational(0), 59);
                      const auto a = hk::recurrence_coefficients(kappa, et, m, 60);
                      return flag(s.coeffs() == a, "60 rational coefficients");
                    }});

  checks.push_back({"hooke_p_on_constant", [] {
                      const auto y = series::apply_operator(hk::hooke_p<Rational>(Rational(5), Rational(7)),
                                                            series::PowerSeries<Rational>::monomial(Rational(0), Rational(1)));
                      return flag(y.coefficient_at(Rational(1)) == -5 && y.coefficient_at(Rational(2)) == 7 &&
                                      y.coefficient_at(Rational(3)) == 0,
                                  "P 1 = -kappa rho + Et rho^2");
                    }});

  checks.push_back({"frequency_n2_exact", [] {
                      bool ok = true;
                      for (int m = 0; m <= 8; ++m)
                        for (int Z : {1, -1, 3, -3}) {
                          const auto b = hk::solve_frequencies(2, Rational(m), Z);
                          ok = ok && b.size() == 1 && b[0].omega_exact &&
                               *b[0].omega_exact == Rational(Z * Z, 2 * (2 * m + 1));
                        }
                      return flag(ok, "omega = Z^2 / (2(2|m|+1))");
                    }});

  checks.push_back({"frequency_n3_exact", [] {
                      bool ok = true;
                      for (int m = 0; m <= 8; ++m)
                        for (int Z : {1, -1, 3, -3}) {
                          const auto b = hk::solve_frequencies(3, Rational(m), Z);
                          ok = ok && b.size() == 1 && b[0].omega_exact &&
                               *b[0].omega_exact == Rational(Z * Z, 4 * (4 * m + 3));
                        }
                      return flag(ok, "omega = Z^2 / (4(4|m|+3))");
                    }});

  checks.push_back({"frequency_n4_formula", [] {
                      double worst = 0.0;
                      for (int m = 0; m <= 8; ++m)
                        for (double Z : {1.0, -1.0, 3.0, -3.0}) {
                          const auto b = hk::solve_frequencies(4, Rational(m), Z);
                          if (b.size() != 2) return flag(false, "expected two branches");
                          const double d = 18.0 * (4.0 * m * m + 8.0 * m + 3.0);
                          const double root = std::sqrt(73.0 + 128.0 * m + 64.0 * m * m);
                          worst = std::max(worst, std::abs(b[0].omega - Z * Z * (10.0 * (1 + m) + root) / d));
                          worst = std::max(worst, std::abs(b[1].omega - Z * Z * (10.0 * (1 + m) - root) / d));
                        }
                      return within(worst, 1e-12, "max |omega - formula|");
                    }});

  checks.push_back({"residual_n2m0Zp1", [perturb] {
                      const auto b = hk::make_branch(2, Rational(0), 1.0);
                      const auto wf = hk::RadialWavefunction::build(b);
                      const auto params = hk::HookeParams::with_omega_tilde(b.Z, b.m, b.omega * (1.0 + perturb));
                      return within(hk::verify_branch(wf, params, linear(1e-3, 12.0, 400)), 1e-9, "residual");
                    }});

  checks.push_back({"residual_suite", [] {
                      double worst = 0.0;
                      const auto grid = linear(1e-3, 12.0, 400);
                      for (int n = 2; n <= 6; ++n)
                        for (int m = 0; m <= 3; ++m)
                          for (double Z : {1.0, -1.0})
                            for (const auto& b : hk::solve_frequencies(n, Rational(m), Z)) {
                              const auto wf = hk::RadialWavefunction::build(b);
                              const auto params = hk::HookeParams::with_omega_tilde(Z, b.m, b.omega);
                              worst = std::max(worst, hk::verify_branch(wf, params, grid));
                              worst = std::max(worst, std::abs(b.eps_rel - b.omega * (n + m)));
                            }
                      return within(worst, 1e-9, "max residual over n<=6, m<=3");
                    }});

  checks.push_back({"eps_rel_n2m0Zp1", [] {
                      return within(std::abs(hk::make_branch(2, Rational(0), 1.0).eps_rel - 1.0), 1e-10,
                                    "|eps_rel - 1|");
                    }});

  checks.push_back({"normalization", [] {
                      double worst = 0.0;
                      for (int n : {2, 3, 4})
                        for (const auto& b : hk::solve_frequencies(n, Rational(1), -1.0)) {
                          const auto wf = hk::RadialWavefunction::build(b);
                          const auto r = integrate([&](double x) { return wf.u(x) * wf.u(x); }, 0.0, wf.r_max(),
                                                   {1e-13, 1e-10, 18});
                          worst = std::max(worst, std::abs(r.value - 1.0));
                        }
                      return within(worst, 1e-9, "max |int u^2 - 1|");
                    }});

  checks.push_back({"nodes_are_zeros", [] {
                      double worst = 0.0;
                      for (const auto& b : hk::solve_frequencies(5, Rational(0), 1.0)) {
                        const auto wf = hk::RadialWavefunction::build(b);
                        if (static_cast<int>(wf.nodes().size()) != wf.node_count()) return flag(false, "count mismatch");
                        for (double r : wf.nodes()) worst = std::max(worst, std::abs(wf.u(r)));
                      }
                      return within(worst, 1e-10, "max |u(node)|");
                    }});

  checks.push_back({"termination_exact", [] {
                      bool ok = true;
                      for (int n : {2, 3})
                        for (int m = 0; m <= 3; ++m) {
                          const auto b = hk::solve_frequencies(n, Rational(m), 1.0);
                          if (!b[0].kappa_sq_exact) return flag(false, "kappa^2 not rational");
                          // a_n has definite parity in kappa; evaluate it as a polynomial in kappa^2.
                          const auto q = hk::quantization_polynomial(n, Rational(m));
                          Rational value(0), power(1);
                          for (int k = n % 2; k <= q.degree(); k += 2) {
                            value += q[k] * power;
                            power *= *b[0].kappa_sq_exact;
                          }
                          ok = ok && value == 0;
                        }
                      return flag(ok, "a_n vanishes exactly at the rational kappa^2");
                    }});

  checks.push_back({"bessel_series_oracle", [] {
                      double worst = 0.0;
                      for (double x : {0.5, 1.0, 5.0, 20.0})
                        for (int k : {0, 1})
                          worst = std::max(worst, std::abs(bessel_i(k, x) / series_oracle(k, x) - 1.0));
                      return within(worst, 1e-10, "max relative error");
                    }});

  checks.push_back({"bessel_derivative", [] {
                      double worst = 0.0;
                      const double h = 1e-5;
                      for (double x : {0.5, 1.0, 5.0, 20.0}) {
                        const double d = (bessel_i(0, x + h) - bessel_i(0, x - h)) / (2 * h);
                        worst = std::max(worst, std::abs(d / bessel_i(1, x) - 1.0));
                      }
                      return within(worst, 1e-6, "max relative |I0' - I1|");
                    }});

  checks.push_back({"closed_form_vs_quadrature", [] {
                      double worst = 0.0;
                      const auto grid = linear(0.0, 8.0, 161);
                      for (auto id : closed_form::all_cases()) {
                        const auto fit = closed_form::fit_cm_width(id, grid);
                        const auto wf = hk::RadialWavefunction::build(closed_form::case_branch(id));
                        auto q = obs::density_quadrature(wf, {fit.beta}, grid);
                        auto c = closed_form::closed_form_density(id, grid);
                        q.normalize();
                        c.normalize();
                        worst = std::max(worst, obs::max_relative_deviation(q.values, c.values));
                      }
                      return within(worst, 1e-5, "max relative deviation");
                    }});

  checks.push_back({"density_total", [] {
                      double worst = 0.0;
                      for (auto id : closed_form::all_cases()) {
                        const auto b = closed_form::case_branch(id);
                        const obs::DensityEvaluator ev(hk::RadialWavefunction::build(b),
                                                       hk::CenterOfMassState::physical(b));
                        worst = std::max(worst, std::abs(ev.total() - 2.0));
                      }
                      return within(worst, 1e-6, "max |int n d^2r - 2|");
                    }});

  checks.push_back({"entropy_oscillator", [] {
                      double worst = 0.0;
                      for (double w : {0.1, 0.5, 2.0}) {
                        const auto wf = hk::RadialWavefunction::build(hk::oscillator_branch(1, Rational(0), w));
                        worst = std::max(worst,
                                         std::abs(entropy::total_entropy(wf) - (1.0 + std::log(std::numbers::pi / w))));
                      }
                      return within(worst, 1e-8, "max |S - (1 + ln(pi/omega))|");
                    }});

  checks.push_back({"entropy_ordering", [] {
                      const auto rows = entropy::entropy_scan(3, {0, 1, 2, 3, 4}, {1.0, -1.0});
                      std::map<double, std::map<int, double>> s;
                      for (const auto& r : rows) s[r.Z][r.m] = r.entropy;
                      bool ok = rows.size() == 10;
                      for (int m = 0; m <= 4 && ok; ++m) {
                        ok = s[-1.0][m] > s[1.0][m];
                        if (m > 0) ok = ok && s[1.0][m] > s[1.0][m - 1] && s[-1.0][m] > s[-1.0][m - 1];
                      }
                      return flag(ok, "increasing in m, attractive above repulsive");
                    }});

  checks.push_back({"entropy_origin", [] {
                      const obs::PairCorrelation g3(hk::RadialWavefunction::build(hk::make_branch(3, Rational(0), -1.0)));
                      const obs::PairCorrelation g1(hk::RadialWavefunction::build(hk::make_branch(2, Rational(1), -1.0)));
                      const double s3 = entropy::entropy_density_at(g3, 0.0);
                      const double s1 = entropy::entropy_density_at(g1, 0.0);
                      return flag(s3 > 0.0 && s1 == 0.0, "S_G(0) > 0 for n3m0Z-1, = 0 for m = 1");
                    }});

  checks.push_back({"qes_round_trip", [] {
                      double worst = 0.0;
                      for (int n = 2; n <= 4; ++n)
                        for (int m = 0; m <= 2; ++m)
                          for (const auto& b : hk::solve_frequencies(n, Rational(m), 1.0)) {
                            const auto s = qes::map_from_hooke(b);
                            const auto h = qes::map_to_hooke(s.params, s.E);
                            worst = std::max({worst, std::abs(h.omega - b.omega) / b.omega, std::abs(h.Z - b.Z),
                                              std::abs(h.eps_rel - b.eps_rel) / b.eps_rel,
                                              h.m_tilde == b.m ? 0.0 : 1.0});
                          }
                      return within(worst, 1e-14, "max relative round-trip error");
                    }});

  checks.push_back({"qes_condition_residual", [] {
                      double worst = 0.0;
                      for (int n = 2; n <= 4; ++n)
                        for (const auto& b : hk::solve_frequencies(n, Rational(0), 1.0)) {
                          const auto s = qes::map_from_hooke(b);
                          worst = std::max(worst, qes::condition_residual(s.params, s.n_qes));
                        }
                      return within(worst, 1e-12, "max condition residual");
                    }});

  checks.push_back({"qes_mapped_residual", [] {
                      double worst = 0.0;
                      const auto grid = linear(1e-3, 12.0, 400);
                      for (int n = 2; n <= 4; ++n)
                        for (const auto& b : hk::solve_frequencies(n, Rational(0), 1.0)) {
                          const auto s = qes::map_from_hooke(b);
                          const auto f = qes::qes_series(s.E, s.params, s.n_qes + 4);
                          worst = std::max(worst, qes::mapped_residual(s.params, s.E, f, grid));
                        }
                      return within(worst, 1e-9, "max mapped residual");
                    }});

  checks.push_back({"qes_exact_state", [] {
                      const qes::SexticParams p{qes::qes_condition(2, Rational(0), 1.0), 1.0, Rational(0)};
                      double worst = 0.0;
                      for (double E : qes::exact_energies(p, 2)) {
                        const auto f = qes::qes_series(E, p, 8);
                        worst = std::max(worst, qes::qes_residual(p, E, f, linear(1e-3, 3.0, 200)));
                        for (std::size_t k = 1; k < f.size(); k += 2) worst = std::max(worst, std::abs(f.coeffs()[k]));
                      }
                      return within(worst, 1e-10, "max residual / odd coefficient");
                    }});

  checks.push_back({"variational_exact_recovery", [] {
                      const qes::SexticParams p{qes::qes_condition(2, Rational(0), 1.0), 1.0, Rational(0)};
                      const auto levels = qes::exact_energies(p, 2);
                      const double E = *std::max_element(levels.begin(), levels.end());
                      const auto s = qes::variational_state(p, 1, 24, {E - 0.5, E + 0.5});
                      if (s.residual_norm > 1e-12) return within(s.residual_norm, 1e-12, "R(E*)");
                      return within(std::abs(s.E_star - E), 1e-8, "|E* - E|");
                    }});

  checks.push_back({"csv_round_trip", [] {
                      const auto wf = hk::RadialWavefunction::build(hk::make_branch(2, Rational(0), 1.0));
                      auto prof = obs::density_quadrature(wf, {0.5}, linear(0.0, 12.0, 241));
                      prof.normalize();
                      std::istringstream in(io::to_csv(io::profile_table(prof)));
                      const auto back = io::read_csv(in);
                      return within(std::abs(io::table_integral(back) - prof.integral()), 1e-9,
                                    "|re-integrated - recorded|");
                    }});

  return checks;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::string first_failure;
  int passed = 0;
  const auto checks = battery(cfg.perturb_omega);
  for (const auto& c : checks) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::nan(""), std::string("threw: ") + e.what()};
    }
    if (o.passed) ++passed;
    else if (first_failure.empty()) first_failure = c.name;
    if (!cfg.json_summary) out << (o.passed ? "PASS " : "FAIL ") << c.name << ": " << o.detail << "\n";
    nlohmann::ordered_json j{{"name", c.name}, {"passed", o.passed}, {"detail", o.detail}};
    if (std::isfinite(o.value)) j["value"] = o.value;
    results.push_back(j);
  }
  if (cfg.json_summary) {
    nlohmann::ordered_json summary{{"count", checks.size()},
                                   {"passed", passed},
                                   {"failed", static_cast<int>(checks.size()) - passed},
                                   {"checks", results}};
    out << summary.dump(2) << "\n";
  } else {
    out << passed << "/" << checks.size() << " checks passed\n";
  }
  if (!first_failure.empty()) {
    std::cerr << "verify failed: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cli
