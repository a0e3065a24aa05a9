#include "hahn/maps.hpp"

#include <cmath>

#include "hahn/cgamma.hpp"

namespace hahn {

namespace {
using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);
}  // namespace

MapBundle make_bundle(const HahnParams& p) {
  p.validate();
  MapBundle b;
  b.params = p;
  b.eq = make_equilibrium(p.c());
  b.x0 = 0.5;
  b.x1 = b.eq.a / 2.0;
  b.delta = std::min(b.eq.a, 1.0 - b.eq.b) / 2.0;
  b.lens_height = b.delta / 2.0;
  return b;
}

cplx band_root(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  // principal roots of both factors multiply to the cut-on-[a,b] branch
  return std::sqrt(zz - b.eq.a) * std::sqrt(zz - b.eq.b);
}

cplx nu(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  double c = b.eq.c;
  cplx r = band_root(b, zz);
  return (2.0 / c) * std::log(c / 2.0 - r) - (std::log(zz) + std::log(1.0 - zz)) / c;
}

cplx phi(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  return b.eq.l / 2.0 - g_explicit(b.eq.c, zz);
}

cplx phi_left(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  int s = half_plane_sign(zz);
  return phi(b, zz) + static_cast<double>(s) * kI * M_PI * (1.0 - zz / b.eq.c);
}

cplx phi_right(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  int s = half_plane_sign(zz);
  return phi(b, zz) + static_cast<double>(s) * kI * M_PI * (1.0 - zz) / b.eq.c;
}

namespace {

// shared 2/3-power rule: the branch of (-(3/2)*phase)^{2/3} is pinned per
// half-plane so the map continues analytically across the band; `mirror`
// distinguishes the map anchored at the right edge
PolarPower two_thirds_power(cplx phase, int s, bool mirror) {
  cplx w = -1.5 * phase;
  double th = std::arg(w);
  // the angular noise near the band is eps/|phase|, well above 1e-12 when the
  // phase itself is small; 1e-9 keeps edge-adjacent real points on the branch
  const double tol = 1e-9;
  int adj = mirror ? -s : s;
  if (adj > 0) {
    if (th >= M_PI / 2.0 - tol) th -= 2.0 * M_PI;
  } else {
    if (th <= -M_PI / 2.0 + tol) th += 2.0 * M_PI;
  }
  return {std::pow(std::abs(w), 2.0 / 3.0), 2.0 * th / 3.0};
}

}  // namespace

PolarPower f_left(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  return two_thirds_power(phi_left(b, zz), half_plane_sign(zz), false);
}

PolarPower f_right(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  return two_thirds_power(phi_right(b, zz), half_plane_sign(zz), true);
}

PolarPower xi_left(const MapBundle& b, cplx z, long n, Side side) {
  PolarPower f = f_left(b, z, side);
  return {std::pow(static_cast<double>(n), 2.0 / 3.0) * f.modulus, f.argument};
}

PolarPower xi_right(const MapBundle& b, cplx z, long n, Side side) {
  PolarPower f = f_right(b, z, side);
  return {std::pow(static_cast<double>(n), 2.0 / 3.0) * f.modulus, f.argument};
}

LogComplex factor_E(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  long N = b.params.bigN;
  cplx phi_int = zz * std::log(zz) - (zz - 1.0) * std::log(zz - 1.0) - 1.0;
  cplx log_e = -static_cast<double>(N) * phi_int;
  for (long j = 0; j < N; ++j) {
    double xj = (j + 0.5) / static_cast<double>(N);
    log_e += std::log(zz - xj);
  }
  return {log_e.real(), std::exp(kI * log_e.imag())};
}

LogComplex sin_scaled(long bigN, cplx z) {
  cplx w = M_PI * static_cast<double>(bigN) * z;
  // sin w = e^{iw}/(2i) - e^{-iw}/(2i), each exponential carried in log scale
  LogComplex t1{-w.imag(), std::exp(kI * w.real()) / (2.0 * kI)};
  LogComplex t2{w.imag(), -std::exp(-kI * w.real()) / (2.0 * kI)};
  return t1 + t2;
}

LogComplex cos_scaled(long bigN, cplx z) {
  cplx w = M_PI * static_cast<double>(bigN) * z;
  LogComplex t1{-w.imag(), std::exp(kI * w.real()) * 0.5};
  LogComplex t2{w.imag(), std::exp(-kI * w.real()) * 0.5};
  return t1 + t2;
}

LogComplex factor_E_cont(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  int s = half_plane_sign(zz);
  long N = b.params.bigN;
  LogComplex e = factor_E(b, zz);
  // e^{-s N pi i z}
  cplx expo = -static_cast<double>(s) * kI * M_PI * static_cast<double>(N) * zz;
  LogComplex twist{expo.real(), std::exp(kI * expo.imag())};
  LogComplex two_cos = cos_scaled(N, zz) * cplx(2.0, 0.0);
  return e * twist / two_cos;
}

namespace {

LogComplex from_log(cplx log_value) {
  return {log_value.real(), std::exp(kI * log_value.imag())};
}

}  // namespace

LogComplex factor_D(const MapBundle& b, cplx z) {
  cplx w = static_cast<double>(b.params.bigN) * z;
  return from_log(log_stirling_ratio(w));
}

LogComplex factor_D_star(const MapBundle& b, cplx z) {
  cplx w = -static_cast<double>(b.params.bigN) * z;
  return from_log(-log_stirling_ratio(w));
}

LogComplex factor_D_switch(const MapBundle& b, cplx z) {
  if (z.real() <= b.x0) return factor_D_star(b, z);
  return factor_D_star(b, 1.0 - z);
}

}  // namespace hahn
