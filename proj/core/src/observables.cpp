#include "harmonium/observables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "harmonium/bessel.hpp"

namespace harmonium::observables {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

}  // namespace

GridSpec GridSpec::for_omega(double omega) { return {1e-4, 12.0 / std::sqrt(omega), 512, Spacing::Log}; }

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4) throw std::invalid_argument("grid must be min:max:points[:lin|log]");
  GridSpec g;
  g.min = parse_double(parts[0]);
  g.max = parse_double(parts[1]);
  std::size_t pos = 0;
  g.points = std::stoi(parts[2], &pos);
  if (pos != parts[2].size()) throw std::invalid_argument("bad point count '" + parts[2] + "'");
  g.spacing = Spacing::Linear;
  if (parts.size() == 4) {
    if (parts[3] == "log") g.spacing = Spacing::Log;
    else if (parts[3] != "lin" && parts[3] != "linear") throw std::invalid_argument("bad spacing '" + parts[3] + "'");
  }
  return g;
}

std::vector<double> make_grid(const GridSpec& g) {
  if (g.points < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(g.max > g.min)) throw std::invalid_argument("grid max must exceed min");
  if (g.min < 0) throw std::invalid_argument("grid radii must be nonnegative");
  if (g.spacing == Spacing::Log && !(g.min > 0)) throw std::invalid_argument("log grid needs min > 0");
  std::vector<double> out(static_cast<std::size_t>(g.points));
  const double last = g.points - 1.0;
  for (int i = 0; i < g.points; ++i) {
    const double f = i / last;
    out[static_cast<std::size_t>(i)] = g.spacing == Spacing::Linear
                                           ? g.min + (g.max - g.min) * f
                                           : g.min * std::exp(std::log(g.max / g.min) * f);
  }
  out.back() = g.max;
  return out;
}

double DensityProfile::integral() const {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double h = grid[i + 1] - grid[i];
    acc += 0.5 * h * (values[i] * grid[i] + values[i + 1] * grid[i + 1]);
  }
  return kTwoPi * acc;
}

void DensityProfile::normalize() {
  const double s = integral();
  if (!(s > 0)) throw std::domain_error("cannot normalize a profile with nonpositive integral");
  for (auto& v : values) v *= normalization_target / s;
}

double PairCorrelation::operator()(double r) const {
  const auto& b = wf_.branch();
  const double M = to_double(abs(b.m));
  const double t = wf_.poly_r().evaluate(r);
  const double n = wf_.norm();
  return n * n * std::exp(-b.omega * r * r) * std::pow(r, 2.0 * M) * t * t / kTwoPi;
}

double PairCorrelation::log_value(double r) const {
  const auto& b = wf_.branch();
  const double M = to_double(abs(b.m));
  const double t = wf_.poly_r().evaluate(r);
  const double lr = M == 0.0 ? 0.0 : 2.0 * M * std::log(r);
  return 2.0 * std::log(wf_.norm()) - b.omega * r * r + lr + 2.0 * std::log(std::abs(t)) - std::log(kTwoPi);
}

DensityProfile PairCorrelation::sample(const std::vector<double>& grid) const {
  DensityProfile p;
  p.grid = grid;
  p.normalization_target = 1.0;
  for (double r : grid) p.values.push_back((*this)(r));
  return p;
}

double PairCorrelation::norm() const {
  std::vector<double> pieces{0.0};
  for (double x : wf_.nodes()) pieces.push_back(x);
  pieces.push_back(wf_.r_max());
  return integrate_pieces([this](double r) { return kTwoPi * r * (*this)(r); }, pieces, {1e-14, 1e-13, 18}).value;
}

PairCorrelation pair_correlation(const hooke::RadialWavefunction& wf) { return PairCorrelation(wf); }

DensityEvaluator::DensityEvaluator(hooke::RadialWavefunction wf, hooke::CenterOfMassState cm, DensityMethod method,
                                   QuadratureOptions opts)
    : wf_(std::move(wf)), cm_(cm), method_(method), opts_(opts) {
  if (!(cm_.beta > 0)) throw std::invalid_argument("centre-of-mass width must be positive");
}

QuadratureOptions DensityEvaluator::default_options() { return {1e-14, 1e-10, 18}; }

double DensityEvaluator::operator()(double x) const {
  return method_ == DensityMethod::BesselKernel ? bessel_kernel(x) : angular(x);
}

double DensityEvaluator::bessel_kernel(double x) const {
  const double beta = cm_.beta;
  auto f = [&](double rp) {
    const double u = wf_.u(rp);
    const double d = x - 0.5 * rp;
    return u * u * std::exp(-beta * d * d) * bessel_i0e(beta * x * rp);
  };
  std::vector<double> pieces{0.0};
  if (2.0 * x < wf_.r_max()) pieces.push_back(2.0 * x);
  pieces.push_back(wf_.r_max());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  return 2.0 * beta / std::numbers::pi * integrate_pieces(f, pieces, opts_).value;
}

double DensityEvaluator::angular(double x) const {
  const double beta = cm_.beta;
  auto f = [&](double rp) {
    const double u = wf_.u(rp);
    const double d = x - 0.5 * rp;
    const double k = beta * x * rp;
    auto ang = [k](double th) { return std::exp(-k * (1.0 + std::cos(th))); };
    const double inner = 2.0 * integrate(ang, 0.0, std::numbers::pi, opts_).value;
    return u * u * std::exp(-beta * d * d) * inner;
  };
  std::vector<double> pieces{0.0};
  if (2.0 * x < wf_.r_max()) pieces.push_back(2.0 * x);
  pieces.push_back(wf_.r_max());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  return beta / (std::numbers::pi * std::numbers::pi) * integrate_pieces(f, pieces, opts_).value;
}

double DensityEvaluator::total() const {
  const double upper = 0.5 * wf_.r_max() + 10.0 / std::sqrt(cm_.beta);
  return integrate([this](double x) { return kTwoPi * x * (*this)(x); }, 0.0, upper, opts_).value;
}

DensityProfile density_quadrature(const hooke::RadialWavefunction& wf, const hooke::CenterOfMassState& cm,
                                  const std::vector<double>& grid, DensityMethod method,
                                  const QuadratureOptions& opts) {
  const DensityEvaluator n(wf, cm, method, opts);
  DensityProfile p;
  p.grid = grid;
  p.normalization_target = 2.0;
  p.values.reserve(grid.size());
  for (double x : grid) p.values.push_back(n(x));
  return p;
}

double max_relative_deviation(const std::vector<double>& a, const std::vector<double>& b, double floor) {
  if (a.size() != b.size()) throw std::invalid_argument("profiles differ in length");
  double peak = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) peak = std::max({peak, std::abs(a[i]), std::abs(b[i])});
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ref = std::max(std::abs(a[i]), std::abs(b[i]));
    if (ref < floor * peak || ref == 0.0) continue;
    worst = std::max(worst, std::abs(a[i] - b[i]) / ref);
  }
  return worst;
}

}  // namespace harmonium::observables
