#include "harmonium/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <sstream>

#include "harmonium/errors.hpp"

namespace harmonium {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (a == b) return {};
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, opts.max_depth, opts.rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > std::max(opts.abs_tol, opts.rel_tol * l1)) {
    std::ostringstream os;
    os << "quadrature on [" << a << ", " << b << "] did not converge: error estimate " << error
       << " (abs_tol " << opts.abs_tol << ", rel_tol " << opts.rel_tol << ", depth " << opts.max_depth << ")";
    throw QuadratureNonConvergence(os.str());
  }
  return {value, error};
}

QuadratureResult integrate_pieces(const std::function<double(double)>& f, const std::vector<double>& breakpoints,
                                  const QuadratureOptions& opts) {
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const auto piece = integrate(f, breakpoints[i], breakpoints[i + 1], opts);
    total.value += piece.value;
    total.error += piece.error;
  }
  return total;
}

}  // namespace harmonium
