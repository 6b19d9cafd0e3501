#pragma once

#include <functional>
#include <vector>

namespace harmonium {

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  /// Bisection depth of the adaptive Gauss-Kronrod rule.
  unsigned max_depth = 18;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive 61-point Gauss-Kronrod on [a, b]; b may be +infinity.
/// Throws QuadratureNonConvergence when the error estimate exceeds
/// max(abs_tol, rel_tol * |integral of |f||).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Same, summed over consecutive pieces [p0, p1], [p1, p2], ...
QuadratureResult integrate_pieces(const std::function<double(double)>& f, const std::vector<double>& breakpoints,
                                  const QuadratureOptions& opts = {});

}  // namespace harmonium
