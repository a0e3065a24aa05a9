#pragma once

// The three regional asymptotic assemblies for the monic rescaled polynomial,
// the fixed-argument limit formulas in the original normalization, region
// classification, and the specialized alpha=beta=0 reduction checks.

#include <complex>

#include "hahn/maps.hpp"
#include "hahn/parametrix.hpp"

namespace hahn {

enum class Region { I, II, III };

struct RegionTag {
  Region region = Region::I;
  int half_plane = 0;    // +1 upper, -1 lower, 0 on the real axis
  bool in_lens = false;  // inside the lens strip over the open band
  int side_of_split = 0; // -1 left of the x0 line, +1 right, 0 on it
};

RegionTag classify(const MapBundle& b, std::complex<double> z);

inline const char* region_name(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    default: return "III";
  }
}

struct AsymptoticResult {
  LogComplex value;  // scaled approximation of the monic polynomial
  Region region = Region::I;
  // natural log of the exponentially small correction bound attached in the
  // lens strip (metadata only, never added to the value); -inf elsewhere
  double correction_bound_log = -1e300;
};

AsymptoticResult asym_region_I(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);
AsymptoticResult asym_region_II(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);
AsymptoticResult asym_region_III(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// dispatch on classify(z)
AsymptoticResult asym_auto(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);

// Fixed-argument limit of Q_n(x; alpha, beta, N-1) as n -> infinity with
// x held fixed, N = round(n / c).  Returns the leading term in scaled form;
// returns an exact zero for nonnegative-integer x (vanishing leading term).
// x = -1/2 separates the two formula branches and is rejected.
LogComplex asym_fixed_x(const HahnParams& p, double x);

// conversions between the monic normalization and the Q normalization
LogComplex monic_to_Q(const HahnParams& p, const LogComplex& monic_value);
LogComplex Q_to_monic(const HahnParams& p, const LogComplex& q_value);

// alpha=beta=0 reductions: relative residual between the general assembly and
// an independently coded specialized form (algebraically identical)
double chebyshev_residual_band(const MapBundle& b, std::complex<double> z, Side side = Side::Auto);
double chebyshev_residual_left_negative(const MapBundle& b, double x);  // x < 0
double chebyshev_residual_left_saturated(const MapBundle& b, double x); // 0 < x < x1

}  // namespace hahn
