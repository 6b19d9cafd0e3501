#pragma once

namespace harmonium {

/// Modified Bessel function of the first kind I_order(x), order 0 or 1, x >= 0.
/// With scaled = true returns exp(-x) I_order(x), which stays finite for large x.
double bessel_i(int order, double x, bool scaled = false);

inline double bessel_i0e(double x) { return bessel_i(0, x, true); }
inline double bessel_i1e(double x) { return bessel_i(1, x, true); }

}  // namespace harmonium
