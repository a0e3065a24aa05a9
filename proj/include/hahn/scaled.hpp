#pragma once

// Log-scaled complex values: the magnitude is carried as a natural log so that
// quantities like e^{nl/2} at n=256 never overflow a double.  unit is the O(1)
// complex remainder; value = exp(logmag) * unit whenever that is representable.

#include <cmath>
#include <complex>
#include <limits>

#include "hahn/bigfloat.hpp"

namespace hahn {

struct LogComplex {
  double logmag = 0.0;                 // natural log scale factor
  std::complex<double> unit{1.0, 0.0}; // O(1) remainder

  static LogComplex zero() { return {-std::numeric_limits<double>::infinity(), {0.0, 0.0}}; }

  static LogComplex from_value(std::complex<double> v) {
    double a = std::abs(v);
    if (a == 0.0) return zero();
    return {std::log(a), v / a};
  }

  static LogComplex from_big(const BigComplex& v) {
    BigFloat a = abs(v);
    if (a.is_zero()) return zero();
    BigFloat lm = log(a);
    BigComplex u = v / a;
    return {lm.to_double(), u.to_complex()};
  }

  bool is_zero() const { return unit == std::complex<double>(0.0, 0.0); }

  std::complex<double> value() const { return std::exp(logmag) * unit; }

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.logmag + b.logmag, a.unit * b.unit};
  }
  friend LogComplex operator/(const LogComplex& a, const LogComplex& b) {
    return {a.logmag - b.logmag, a.unit / b.unit};
  }
  friend LogComplex operator*(const LogComplex& a, std::complex<double> s) {
    return a * from_value(s);
  }
  // addition renormalizes against the larger scale; the smaller term underflows
  // gracefully instead of poisoning the result
  friend LogComplex operator+(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogComplex& hi = (a.logmag >= b.logmag) ? a : b;
    const LogComplex& lo = (a.logmag >= b.logmag) ? b : a;
    std::complex<double> sum = hi.unit + lo.unit * std::exp(lo.logmag - hi.logmag);
    return from_value(sum) * LogComplex{hi.logmag, {1.0, 0.0}};
  }
  friend LogComplex operator-(const LogComplex& a, const LogComplex& b) {
    return a + LogComplex{b.logmag, -b.unit};
  }
};

// |x - y| / |y| evaluated without leaving scaled space
inline double relative_error(const LogComplex& x, const LogComplex& y) {
  if (y.is_zero()) return x.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  double shift = x.logmag - y.logmag;
  if (shift > 700.0) return std::numeric_limits<double>::infinity();
  std::complex<double> ratio = (shift < -700.0) ? std::complex<double>(0.0, 0.0)
                                                : std::exp(shift) * (x.unit / y.unit);
  return std::abs(ratio - 1.0);
}

}  // namespace hahn
