#pragma once

// Outer model-problem solution: the Szego-type scalar M, the quartic-root
// ratio a(z), the 2x2 matrix N(z), and the two scalar combinations m, m*
// entering the final asymptotic formulas.

#include <complex>

#include "hahn/maps.hpp"

namespace hahn {

// limit of M at infinity: (2/(sqrt a + sqrt b))^{alpha+beta}
double m_infinity(const MapBundle& b);

// scalar Szego factor, analytic off [a,b], M+ M- = x^{-alpha} (1-x)^{-beta}
std::complex<double> szego_M(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// (z-b)^{1/4} / (z-a)^{1/4}, continuous off [a,b], -> 1 at infinity
std::complex<double> ratio_a(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

struct OuterParametrix {
  std::complex<double> n11, n12, n21, n22;
  std::complex<double> m, m_star;
  std::complex<double> det() const { return n11 * n22 - n12 * n21; }
};

OuterParametrix outer_N(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// closed forms of the two scalar combinations entering the final formulas
// (independent of outer_N; consistency between the two routes is a test)
std::complex<double> m_value(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);
std::complex<double> m_star_value(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// limiting interior weight h(x) = x^alpha (1-x)^beta
double h_weight(const MapBundle& b, double x);

}  // namespace hahn
