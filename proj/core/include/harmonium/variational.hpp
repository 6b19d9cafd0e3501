#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "harmonium/qes.hpp"

namespace harmonium::qes {

struct VariationalOptions {
  /// Scan points over the bracket before refinement.
  int scan_points = 41;
  /// Absolute tolerance on E.
  double tolerance = 1e-10;
};

struct VariationalState {
  double E_star;
  series::PowerSeries<double> series;
  int node_count;
  /// R(E*) = ||(H - E*) Psi||^2 / ||Psi||^2
  double residual_norm;
};

/// x beyond which psi0^2 < 1e-18 of its scale: exp(-sqrt(gamma) x^4 / 2) = 1e-18.
double x_max(const SexticParams& p);

/// Sign changes of the polynomial f on (0, x_hi), exact (Sturm), using the
/// even-power structure when present.
int node_count(const series::PowerSeries<double>& f, double x_hi);

/// R(E) for the truncated series at order N.
double residual_functional(const SexticParams& p, double E, int N);

/// <Psi|(H - E)|Psi> / <Psi|Psi> for the truncated series.
double expectation_functional(const SexticParams& p, double E, int N);

/// Minimize R(E) over the bracket among energies whose series has target_nodes nodes.
/// Throws NodeCountUnreachable or BracketError.
VariationalState variational_state(const SexticParams& p, int target_nodes, int N,
                                   std::pair<double, double> bracket, const VariationalOptions& opts = {});

/// Root of the expectation functional in the bracket (throws BracketError without a sign change).
double expectation_root(const SexticParams& p, int N, std::pair<double, double> bracket);

/// Default bracket [0, 3 * spacing of the exact levels at the given n], or [0, 3 sqrt(gamma)] without neighbours.
std::pair<double, double> default_bracket(const SexticParams& p, int n);

struct HookeVariationalState {
  double eps_star;
  series::PowerSeries<double> series;
  int node_count;
  double residual_norm;
};

/// The same estimator in the Hooke frame at fixed (Z, omega, m): t(rho) from the
/// recurrence with eps varied, R(eps) = ||(L - eps) u||^2 / ||u||^2. The target
/// node count selects the scan region only; the returned count is whatever the
/// refined polynomial has on (0, r_max).
double hooke_residual_functional(double Z, double omega, const Rational& m, double eps, int N);
HookeVariationalState hooke_variational_state(double Z, double omega, const Rational& m, int target_nodes, int N,
                                              std::pair<double, double> bracket,
                                              const VariationalOptions& opts = {});

/// Golden-section search with parabolic steps (Brent) for a minimum of f on [a, b].
/// Returns (x, f(x)).
std::pair<double, double> minimize_scalar(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace harmonium::qes
