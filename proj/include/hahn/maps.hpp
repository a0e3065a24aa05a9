#pragma once

// The scalar auxiliary functions with their branch cuts: the phase functions
// vanishing at each band edge, their 2/3-power conformal maps feeding the Airy
// arguments, the node-product factor E and its continued variant, and the
// Stirling-ratio D factors.  All fractional powers that feed quarter-root
// prefactors are carried as (modulus, argument) pairs so downstream code never
// re-branches them.

#include <complex>

#include "hahn/equilibrium.hpp"
#include "hahn/params.hpp"
#include "hahn/scaled.hpp"

namespace hahn {

struct MapBundle {
  HahnParams params;
  EquilibriumData eq;
  double x0 = 0.5;          // vertical split inside the band
  double x1 = 0.0;          // left edge of the central rectangle K
  double delta = 0.0;       // half-height of K
  double lens_height = 0.0; // half-height of the lens domains over the band
};

MapBundle make_bundle(const HahnParams& p);

// sqrt((z-a)(z-b)) on the branch cut along [a,b], ~ z at infinity
std::complex<double> band_root(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

std::complex<double> nu(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// phase function l/2 - g(z)
std::complex<double> phi(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// variant vanishing at the left band edge a (analytic off (-inf,0] u [a,inf))
std::complex<double> phi_left(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// variant vanishing at the right band edge b
std::complex<double> phi_right(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// A fractional power kept in polar pieces; argument is NOT reduced to
// (-pi, pi] — it carries the side-consistent determination.
struct PolarPower {
  double modulus = 0.0;
  double argument = 0.0;
  std::complex<double> value() const {
    return modulus * std::exp(std::complex<double>(0.0, argument));
  }
  PolarPower pow(double p) const { return {std::pow(modulus, p), p * argument}; }
};

// conformal maps (-(3/2) * phase)^{2/3}; simple zero at the respective edge
PolarPower f_left(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);
PolarPower f_right(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// Airy arguments: n^{2/3} * f
PolarPower xi_left(const MapBundle& b, std::complex<double> z, long n, Side side = Side::Auto);
PolarPower xi_right(const MapBundle& b, std::complex<double> z, long n, Side side = Side::Auto);

// node product factor: E(z) = e^{-N phi_int(z)} prod_j (z - x_j) with
// phi_int = z log z - (z-1) log(z-1) - 1; tends to 1 away from [0,1]
LogComplex factor_E(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// continuation of E across (0,1): E * e^{-+ N pi i z} / (2 cos(N pi z))
LogComplex factor_E_cont(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// Stirling-ratio factors
LogComplex factor_D(const MapBundle& b, std::complex<double> z);
LogComplex factor_D_star(const MapBundle& b, std::complex<double> z);
// piecewise switch used by the elementary-region formula:
// D_star(z) left of x0, D_star(1-z) right of x0
LogComplex factor_D_switch(const MapBundle& b, std::complex<double> z);

// overflow-safe sin/cos of (N pi z) for complex z
LogComplex sin_scaled(long bigN, std::complex<double> z);
LogComplex cos_scaled(long bigN, std::complex<double> z);

}  // namespace hahn
