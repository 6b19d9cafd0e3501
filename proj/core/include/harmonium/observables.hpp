#pragma once

#include <string>
#include <vector>

#include "harmonium/hooke.hpp"
#include "harmonium/quadrature.hpp"

namespace harmonium::observables {

enum class Spacing { Linear, Log };

struct GridSpec {
  double min = 1e-4;
  double max = 12.0;
  int points = 512;
  Spacing spacing = Spacing::Log;

  /// Default profile grid for a state of frequency omega: log spacing on [1e-4, 12/sqrt(omega)].
  static GridSpec for_omega(double omega);
  /// "min:max:points", optionally followed by ":lin" or ":log" (linear by default).
  static GridSpec parse(const std::string& text);
};

std::vector<double> make_grid(const GridSpec& spec);

/// Radial samples with a 2D-measure normalization target.
struct DensityProfile {
  std::vector<double> grid;
  std::vector<double> values;
  double normalization_target = 2.0;

  /// Trapezoid estimate of 2 pi int value(r) r dr over the grid.
  double integral() const;
  /// Rescale so integral() equals the target.
  void normalize();
};

/// G(r) = u(r)^2 / (2 pi r).
class PairCorrelation {
 public:
  explicit PairCorrelation(hooke::RadialWavefunction wf) : wf_(std::move(wf)) {}

  const hooke::RadialWavefunction& wavefunction() const { return wf_; }
  double operator()(double r) const;
  /// ln G, finite away from nodes even where G underflows.
  double log_value(double r) const;
  DensityProfile sample(const std::vector<double>& grid) const;
  /// 2 pi int G r dr by quadrature.
  double norm() const;

 private:
  hooke::RadialWavefunction wf_;
};

PairCorrelation pair_correlation(const hooke::RadialWavefunction& wf);

enum class DensityMethod { BesselKernel, Angular };

/// Single-particle density n(x) = 2 int d^2r' |xi(x + r'/2)|^2 |phi(r')|^2.
/// The angular integral is done analytically (scaled I_0 kernel) or numerically.
class DensityEvaluator {
 public:
  DensityEvaluator(hooke::RadialWavefunction wf, hooke::CenterOfMassState cm,
                   DensityMethod method = DensityMethod::BesselKernel, QuadratureOptions opts = default_options());

  double operator()(double x) const;
  /// 2 pi int n(x) x dx.
  double total() const;

  static QuadratureOptions default_options();

 private:
  double bessel_kernel(double x) const;
  double angular(double x) const;

  hooke::RadialWavefunction wf_;
  hooke::CenterOfMassState cm_;
  DensityMethod method_;
  QuadratureOptions opts_;
};

DensityProfile density_quadrature(const hooke::RadialWavefunction& wf, const hooke::CenterOfMassState& cm,
                                  const std::vector<double>& grid, DensityMethod method = DensityMethod::BesselKernel,
                                  const QuadratureOptions& opts = DensityEvaluator::default_options());

/// Largest |a - b| / max(a, b) over points where max(a, b) >= floor * peak.
double max_relative_deviation(const std::vector<double>& a, const std::vector<double>& b, double floor = 1e-8);

}  // namespace harmonium::observables
