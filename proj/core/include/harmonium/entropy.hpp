#pragma once

#include <vector>

#include "harmonium/hooke.hpp"
#include "harmonium/observables.hpp"

namespace harmonium::entropy {

struct EntropyProfile {
  std::vector<double> grid;
  /// S_G(r) = -G ln G, with 0 ln 0 = 0.
  std::vector<double> values;
  /// -int G ln G d^2r
  double total = 0.0;
};

struct Surface {
  std::vector<double> x;
  std::vector<double> y;
  /// Row-major, values[i * y.size() + j] at (x[i], y[j]).
  std::vector<double> values;
};

double entropy_density_at(const observables::PairCorrelation& G, double r);
EntropyProfile entropy_density(const observables::PairCorrelation& G, const std::vector<double>& grid);
/// Cartesian points x, y in [-extent, extent]; extent <= 0 picks 5/sqrt(omega).
Surface entropy_surface(const observables::PairCorrelation& G, int points = 201, double extent = 0.0);

/// -int_0^inf u^2 ln(u^2 / (2 pi r)) dr.
double total_entropy(const hooke::RadialWavefunction& wf, const QuadratureOptions& opts = {1e-10, 1e-12, 18});

struct ScanRow {
  int m;
  double omega;
  double Z;
  double entropy;
};

/// One row per branch of (n, m, Z) over the ranges, evaluated concurrently, sorted by omega.
std::vector<ScanRow> entropy_scan(int n, const std::vector<int>& m_values, const std::vector<double>& Z_values,
                                  const QuadratureOptions& opts = {1e-10, 1e-12, 18});

}  // namespace harmonium::entropy
