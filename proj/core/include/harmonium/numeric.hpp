#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>

namespace harmonium {

/// Exact rational (GMP).
using Rational = boost::multiprecision::mpq_rational;
/// Extended-precision real (50 decimal digits, GMP).
using ExtReal = boost::multiprecision::mpf_float_50;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const ExtReal& x) { return x.convert_to<double>(); }

/// Exact conversion; every finite double is a dyadic rational.
inline Rational exact_rational(double x) { return Rational(x); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const ExtReal& x) { return x.is_zero(); }

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline std::string to_string(const Rational& x) { return x.str(); }

/// Falling factorial s (s-1) ... (s-j+1); 1 for j = 0.
inline Rational falling_factorial(const Rational& s, int j) {
  Rational out(1);
  for (int i = 0; i < j; ++i) out *= s - i;
  return out;
}

/// Conversion of an exact scalar into a coefficient ring.
template <class T>
struct FromRational;

template <>
struct FromRational<double> {
  static double convert(const Rational& r) { return to_double(r); }
};

template <>
struct FromRational<ExtReal> {
  static ExtReal convert(const Rational& r) { return ExtReal(r); }
};

template <>
struct FromRational<Rational> {
  static Rational convert(const Rational& r) { return r; }
};

template <class T>
T from_rational(const Rational& r) {
  return FromRational<T>::convert(r);
}

}  // namespace harmonium
