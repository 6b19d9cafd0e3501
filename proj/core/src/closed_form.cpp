#include "harmonium/closed_form.hpp"

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "harmonium/bessel.hpp"
#include "harmonium/quadrature.hpp"

namespace harmonium::closed_form {
namespace {

constexpr double kPi = std::numbers::pi;

double horner(const std::vector<double>& c, double y) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
  return acc;
}

}  // namespace

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> ids{CaseId::N2M0Zp1, CaseId::N2M0Zm1, CaseId::N2M1Zp1, CaseId::N3M0Zp1};
  return ids;
}

DensityCase get_case(CaseId id, Variant variant) {
  const double pi3 = kPi * kPi * kPi;
  switch (id) {
    case CaseId::N2M0Zp1:
      return {id, "n2m0Zp1", 2, 0, 1.0, 9.0 / 20, 1.0 / 20, {65, 4}, 10, {10, 1}, {1}, 1.0,
              16 * pi3 / (125 * (3 + std::sqrt(2 * kPi)))};
    case CaseId::N2M0Zm1:
      return {id, "n2m0Zm1", 2, 0, -1.0, 9.0 / 20, 1.0 / 20, {65, 4}, 10, {10, 1}, {1}, -1.0,
              16 * pi3 / (125 * (3 - std::sqrt(2 * kPi)))};
    case CaseId::N2M1Zp1:
      return {id, "n2m1Zp1", 2, 1, 1.0, 3.0 / 20, 1.0 / 60, {13950, 705, 4}, 30, {1350, 90, 1}, {60, 1}, 1.0,
              64 * pi3 / (9375 * (42 + 9 * std::sqrt(6 * kPi)))};
    case CaseId::N3M0Zp1:
      return {id, "n3m0Zp1", 3, 0, 1.0, 3.0 / 40, 1.0 / 120, {106425, 2160, 4}, 15, {15300, 435, 2}, {315, 2},
              variant == Variant::AsPrinted ? -1.0 : 1.0,
              16 * pi3 / (28125 * (25 + 8 * std::sqrt(3 * kPi)))};
  }
  throw std::invalid_argument("unknown density case");
}

CaseId parse_case(const std::string& name) {
  for (auto id : all_cases())
    if (case_name(id) == name) return id;
  throw std::invalid_argument("unknown density case '" + name + "'");
}

std::string case_name(CaseId id) { return get_case(id).name; }

double evaluate_raw(const DensityCase& dc, double r) {
  const double y = r * r;
  const double by = dc.b * y;
  const double bessel = horner(dc.q, y) * bessel_i0e(by) + y * horner(dc.w, y) * bessel_i1e(by);
  return dc.prefactor * std::exp(-(dc.a - dc.b) * y) * (horner(dc.p, y) + dc.sign * std::sqrt(dc.c * kPi) * bessel);
}

double raw_integral(const DensityCase& dc) {
  const auto f = [&](double r) { return 2.0 * kPi * r * evaluate_raw(dc, r); };
  const double width = 1.0 / std::sqrt(dc.a - 2.0 * dc.b);
  return integrate_pieces(f, {0.0, 4.0 * width, 40.0 * width}, {1e-300, 1e-14, 20}).value;
}

ClosedFormDensity::ClosedFormDensity(DensityCase dc) : dc_(std::move(dc)), scale_(2.0 / raw_integral(dc_)) {}

double ClosedFormDensity::operator()(double r) const { return scale_ * evaluate_raw(dc_, r); }

observables::DensityProfile closed_form_density(CaseId id, const std::vector<double>& grid, Variant variant) {
  const ClosedFormDensity n(get_case(id, variant));
  observables::DensityProfile p;
  p.grid = grid;
  p.normalization_target = 2.0;
  for (double r : grid) p.values.push_back(n(r));
  return p;
}

hooke::QuantizationBranch case_branch(CaseId id) {
  const auto dc = get_case(id);
  return hooke::solve_frequencies(dc.n, Rational(dc.m), dc.Z).front();
}

WidthFit fit_cm_width(CaseId id, const std::vector<double>& grid, Variant variant, double beta_lo, double beta_hi) {
  const auto dc = get_case(id, variant);
  const auto wf = hooke::RadialWavefunction::build(hooke::solve_frequencies(dc.n, Rational(dc.m), dc.Z).front());
  const ClosedFormDensity target(dc);

  // a coarse subgrid drives the search; the full grid is used for the final report
  std::vector<double> coarse;
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / 64);
  for (std::size_t i = 0; i < grid.size(); i += stride) coarse.push_back(grid[i]);
  std::vector<double> ref;
  double peak = 0.0;
  for (double r : coarse) {
    ref.push_back(target(r));
    peak = std::max(peak, ref.back());
  }

  auto objective = [&](double log_beta) {
    const observables::DensityEvaluator n(wf, {std::exp(log_beta)});
    double acc = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      if (ref[i] < 1e-8 * peak) continue;
      const double d = (n(coarse[i]) - ref[i]) / ref[i];
      acc += d * d;
    }
    return acc;
  };
  std::uintmax_t iters = 200;
  const auto best = boost::math::tools::brent_find_minima(objective, std::log(beta_lo), std::log(beta_hi), 30, iters);

  WidthFit fit{};
  fit.beta = std::exp(best.first);
  fit.objective = best.second;
  const auto q = observables::density_quadrature(wf, {fit.beta}, grid);
  const auto c = closed_form_density(id, grid, variant);
  fit.max_deviation = observables::max_relative_deviation(q.values, c.values);
  return fit;
}

}  // namespace harmonium::closed_form
