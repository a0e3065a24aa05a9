#pragma once

// Complex log-gamma in double precision (Stirling + recurrence + reflection)
// and the Stirling-ratio helper log_gamma_ratio used by the scalar D-factors.
// The imaginary part of these logs is only defined up to 2*pi*k; every caller
// exponentiates, so no continuous-branch bookkeeping is attempted.

#include <cmath>
#include <complex>

namespace hahn {

namespace detail {

inline const double kBinet[7] = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188, -691.0 / 360360, 1.0 / 156};

// Binet tail: lgamma(x) - [(x-1/2) log x - x + log(2 pi)/2], for Re x >= 8
inline std::complex<double> binet_tail(std::complex<double> x) {
  std::complex<double> inv2 = 1.0 / (x * x), p = 1.0 / x, s = 0.0;
  for (double ck : kBinet) {
    s += ck * p;
    p *= inv2;
  }
  return s;
}

// log(sin(pi w)) up to 2*pi*i*k, overflow-safe for large |Im w|
inline std::complex<double> log_sin_pi(std::complex<double> w) {
  const std::complex<double> i(0.0, 1.0);
  if (w.imag() > 3.0) {
    // sin(pi w) = e^{-i pi w} (e^{2 i pi w} - 1) / (2i), first factor dominant
    return -i * M_PI * w + std::log((std::exp(2.0 * i * M_PI * w) - 1.0) / (2.0 * i));
  }
  if (w.imag() < -3.0) {
    return i * M_PI * w + std::log((1.0 - std::exp(-2.0 * i * M_PI * w)) / (2.0 * i));
  }
  return std::log(std::sin(M_PI * w));
}

}  // namespace detail

inline std::complex<double> lgamma_complex(std::complex<double> w) {
  const double half_log_2pi = 0.5 * std::log(2.0 * M_PI);
  if (w.real() < 0.5) {
    // reflection: Gamma(w) Gamma(1-w) = pi / sin(pi w)
    return std::log(M_PI) - detail::log_sin_pi(w) - lgamma_complex(1.0 - w);
  }
  std::complex<double> shift = 0.0;
  while (w.real() < 8.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return (w - 0.5) * std::log(w) - w + half_log_2pi + detail::binet_tail(w) - shift;
}

// log of D(w) := e^w Gamma(w + 1/2) / (sqrt(2 pi) w^w), the Stirling ratio
// that tends to 1 as |w| -> infinity off the negative axis.  The large-|w|
// branch is rearranged so the O(|w| log |w|) pieces cancel analytically.
inline std::complex<double> log_stirling_ratio(std::complex<double> w) {
  if (w.real() >= 8.0) {
    return w * std::log(1.0 + 0.5 / w) - 0.5 + detail::binet_tail(w + 0.5);
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * M_PI);
  return w + lgamma_complex(w + 0.5) - half_log_2pi - w * std::log(w);
}

}  // namespace hahn
