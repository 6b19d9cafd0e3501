#pragma once

// Relative motion of two charges in a planar harmonic trap:
//
//   -1/2 u'' + 1/2 (m^2 - 1/4)/r^2 u + 1/2 w^2 r^2 u + Z/(2r) u = eps_rel u,
//
// with w = 1/2 sqrt(omega_L^2 + omega_0^2). Writing rho = sqrt(w) r and
// u = exp(-rho^2/2) rho^{|m|+1/2} t(rho), t solves [D(D+2|m|) + P] t = 0 with
// P = Et rho^2 - 2 rho^3 d/drho - kappa rho, kappa = Z/sqrt(w),
// Et = eps' - 2|m| - 2 and eps' = 2 eps_rel / w.

#include <optional>
#include <span>
#include <vector>

#include "harmonium/numeric.hpp"
#include "harmonium/polynomial.hpp"
#include "harmonium/series.hpp"

namespace harmonium::hooke {

struct HookeParams {
  double Z = 0.0;
  /// Azimuthal quantum number. Integer for the physical problem; the QES
  /// mapping produces quarter-integers, so any rational is accepted.
  Rational m{0};
  double omega0 = 0.0;
  double omega_larmor = 0.0;

  double omega_tilde() const;
  /// omega_0 chosen so that omega_tilde equals w at the given Larmor frequency.
  static HookeParams with_omega_tilde(double Z, const Rational& m, double w, double omega_larmor = 0.0);
};

struct QuantizationBranch {
  int n = 1;
  Rational m{0};
  double Z = 0.0;
  double kappa = 0.0;
  double omega = 0.0;
  double eps_rel = 0.0;
  double eps_prime = 0.0;
  /// kappa^2 and omega when they are rational (closed-form roots, rational Z).
  std::optional<Rational> kappa_sq_exact;
  std::optional<Rational> omega_exact;
};

/// -1/2 d^2 + 1/2 (m^2 - 1/4) r^-2 + 1/2 w^2 r^2 + Z/(2r)
series::MonomialOperator<double> radial_operator(const HookeParams& params);

/// The radial operator minus eps, conjugated by the Gaussian exp(-g r^2/2):
/// exp(g r^2/2) (L - eps) exp(-g r^2/2) acting on the remaining power series.
series::MonomialOperator<double> conjugated_radial_operator(const HookeParams& params, double gauss, double eps);

/// F(D) = D(D + 2|m|).
series::EulerPolynomial hooke_euler(const Rational& m);

/// P = Et rho^2 - 2 rho^3 d/drho - kappa rho.
template <class T>
series::MonomialOperator<T> hooke_p(const T& kappa, const T& e_tilde) {
  series::MonomialOperator<T> p;
  p.add(e_tilde, 2, 0);
  p.add(-series::one<T>() - series::one<T>(), 3, 1);
  p.add(-kappa, 1, 0);
  return p;
}

/// a_0 .. a_{count-1} from j(j+2|m|) a_j = kappa a_{j-1} + (2(j-2) - Et) a_{j-2}.
template <class T>
std::vector<T> recurrence_coefficients(const T& kappa, const T& e_tilde, const Rational& m, int count) {
  const Rational M = abs(m);
  std::vector<T> a;
  a.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int j = 0; j < count; ++j) {
    if (j == 0) {
      a.push_back(series::one<T>());
      continue;
    }
    T rhs = kappa * a[static_cast<std::size_t>(j - 1)];
    if (j >= 2) rhs = rhs + (from_rational<T>(Rational(2 * (j - 2))) - e_tilde) * a[static_cast<std::size_t>(j - 2)];
    a.push_back(from_rational<T>(Rational(1) / (Rational(j) * (j + 2 * M))) * rhs);
  }
  return a;
}

/// a_0 .. a_{n_target+1} with Et = 2(n_target - 1).
template <class T>
std::vector<T> coefficient_recurrence(const T& kappa, int n_target, const Rational& m) {
  return recurrence_coefficients<T>(kappa, from_rational<T>(Rational(2 * (n_target - 1))), m, n_target + 2);
}

/// a_n(kappa) at Et = 2(n-1), exact in kappa.
Polynomial<Rational> quantization_polynomial(int n, const Rational& m);

/// Branches with sign(kappa) = sign(Z), sorted by descending omega.
/// Throws NoBranchError when there is none (in particular for Z = 0).
std::vector<QuantizationBranch> solve_frequencies(int n, const Rational& m, double Z);

/// Coulomb-free state: odd n, t an even polynomial of degree n-1 (Laguerre).
QuantizationBranch oscillator_branch(int n, const Rational& m, double omega);

/// Branch for the given parameters: solve_frequencies when Z != 0, the
/// oscillator branch at omega otherwise.
QuantizationBranch make_branch(int n, const Rational& m, double Z, double omega_for_z0 = 0.5, std::size_t index = 0);

class RadialWavefunction {
 public:
  static RadialWavefunction build(const QuantizationBranch& branch);

  const QuantizationBranch& branch() const { return branch_; }
  /// t(rho), base exponent 0, degree n-1.
  const series::PowerSeries<double>& poly() const { return t_rho_; }
  /// t(sqrt(w) r) expanded in r.
  const series::PowerSeries<double>& poly_r() const { return t_r_; }
  /// r^{|m|+1/2} t(sqrt(w) r), so that u = norm * exp(-w r^2/2) * this.
  const series::PowerSeries<double>& prefactor_series() const { return v_r_; }
  double norm() const { return norm_; }
  int node_count() const { return nodes_; }
  /// Nodes in r, ascending.
  const std::vector<double>& nodes() const { return node_r_; }
  /// Radius beyond which u^2 is negligible (< 1e-30 of its scale).
  double r_max() const { return r_max_; }

  double u(double r) const;
  /// ln u^2 evaluated without underflow; -inf at nodes.
  double log_u2(double r) const;

 private:
  QuantizationBranch branch_;
  series::PowerSeries<double> t_rho_;
  series::PowerSeries<double> t_r_;
  series::PowerSeries<double> v_r_;
  double norm_ = 1.0;
  int nodes_ = 0;
  std::vector<double> node_r_;
  double r_max_ = 0.0;
};

struct Energies {
  double eps_rel;
  /// eps_rel + m omega_L / 2
  double eps;
  /// 2 eps + omega_0 (N_cm + 1)
  double total;
  /// 2 eps_rel, the convention of the closed-form energy quotes
  double eps_doubled;
};

/// Throws InconsistentParams when params.omega_tilde() differs from the branch.
Energies energies(const QuantizationBranch& branch, const HookeParams& params, int cm_quanta);

/// max |(L - eps_rel) u| / max |u| over the grid.
double verify_branch(const RadialWavefunction& wf, const HookeParams& params, std::span<const double> grid);

/// |xi(R)|^2 = (beta/pi) exp(-beta R^2)
struct CenterOfMassState {
  double beta = 1.0;

  double density(double R) const;
  /// Ground state of the centre-of-mass oscillator at omega_L = 0.
  static CenterOfMassState physical(const QuantizationBranch& branch);
  /// beta = omega, the width matching the catalogued closed-form densities.
  static CenterOfMassState matched(const QuantizationBranch& branch);
};

}  // namespace harmonium::hooke
