#pragma once

// Constrained equilibrium-measure data for the rescaled problem: band
// endpoints, density, external field, the explicit log-potential g and its
// derivative, and the Lagrange constant, with quadrature cross-checks living
// in the tests.

#include <complex>

namespace hahn {

// Which boundary value to take when z lies exactly on a branch cut on the
// real axis.  Off-axis inputs ignore the flag.
enum class Side { Auto, Plus, Minus };

// pin z's imaginary signed zero so principal log/sqrt resolve the cut side
inline std::complex<double> with_side(std::complex<double> z, Side s) {
  if (z.imag() != 0.0 || s == Side::Auto) return z;
  return {z.real(), s == Side::Minus ? -0.0 : +0.0};
}

inline int half_plane_sign(std::complex<double> z) {
  return std::signbit(z.imag()) ? -1 : +1;
}

struct EquilibriumData {
  double a = 0.0;  // left band endpoint, in (0, 1/2)
  double b = 0.0;  // right band endpoint, in (1/2, 1)
  double c = 0.0;  // degree ratio n/N
  double l = 0.0;  // Lagrange constant
};

// a = (1 - sqrt(1-c^2))/2, b = (1 + sqrt(1-c^2))/2
std::pair<double, double> mrs_endpoints(double c);

// equilibrium density: arcsine-type profile on (a,b), saturated at 1/c outside
double density_mu(double c, double x);

// derivative of the density inside the band
double density_mu_prime(double c, double x);

// external field V(x) = 1 - x log x - (1-x) log(1-x)
double external_field_V(double x);

// explicit closed form of the complex log potential g(z)
std::complex<double> g_explicit(double c, std::complex<double> z, Side side = Side::Auto);

// closed form of g'(z)
std::complex<double> g_prime_explicit(double c, std::complex<double> z, Side side = Side::Auto);

// Lagrange constant; computed from the closed form at the left endpoint.
// Throws if the imaginary residue exceeds 1e-10 (internal consistency gate).
double lagrange_l(double c);

// closed form of the band log-integral used as a quadrature anchor:
// int_a^b log(s)/sqrt((s-a)(b-s)) ds = 2 pi log((sqrt a + sqrt b)/2)
double log_integral_band(double c);

EquilibriumData make_equilibrium(double c);

}  // namespace hahn
