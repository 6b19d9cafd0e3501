#pragma once

// Catalogued closed-form single-particle densities, all of the shape
//
//   n(r) = K e^{-(a-b) y} { p(y) + s sqrt(c pi) [ q(y) e^{-b y} I_0(b y) + y w(y) e^{-b y} I_1(b y) ] },
//
// y = r^2, written here with scaled Bessel functions so nothing overflows.

#include <string>
#include <vector>

#include "harmonium/hooke.hpp"
#include "harmonium/observables.hpp"

namespace harmonium::closed_form {

enum class CaseId { N2M0Zp1, N2M0Zm1, N2M1Zp1, N3M0Zp1 };

enum class Variant {
  /// Bessel-term sign as written in the source formula.
  AsPrinted,
  /// Sign consistent with the case label (differs only for n3m0Zp1).
  Corrected,
};

struct DensityCase {
  CaseId id;
  std::string name;
  int n;
  int m;
  double Z;
  double a;
  double b;
  std::vector<double> p;
  double c;
  std::vector<double> q;
  std::vector<double> w;
  double sign;
  /// Printed overall constant (times pi^3); not used for normalization.
  double prefactor;
};

const std::vector<CaseId>& all_cases();
DensityCase get_case(CaseId id, Variant variant = Variant::Corrected);
CaseId parse_case(const std::string& name);
std::string case_name(CaseId id);

/// Literal expression, including the printed prefactor.
double evaluate_raw(const DensityCase& dc, double r);
/// 2 pi int raw r dr.
double raw_integral(const DensityCase& dc);

/// Evaluator scaled so that 2 pi int n r dr = 2.
class ClosedFormDensity {
 public:
  explicit ClosedFormDensity(DensityCase dc);
  double operator()(double r) const;
  const DensityCase& info() const { return dc_; }
  double scale() const { return scale_; }

 private:
  DensityCase dc_;
  double scale_;
};

observables::DensityProfile closed_form_density(CaseId id, const std::vector<double>& grid,
                                                Variant variant = Variant::Corrected);

struct WidthFit {
  double beta;
  /// Sum of squared relative deviations at the optimum.
  double objective;
  /// Max relative deviation between the two normalized profiles at the fitted width.
  double max_deviation;
};

/// Fit the centre-of-mass width beta for which the quadrature density of the
/// case's branch best matches the closed form on the grid (Brent search on ln beta).
WidthFit fit_cm_width(CaseId id, const std::vector<double>& grid, Variant variant = Variant::Corrected,
                      double beta_lo = 1e-3, double beta_hi = 10.0);

hooke::QuantizationBranch case_branch(CaseId id);

}  // namespace harmonium::closed_form
