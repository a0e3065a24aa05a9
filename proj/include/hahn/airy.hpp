#pragma once

// Complex Airy functions from scratch: Maclaurin series inside |z| <= 9,
// Poincare expansions with sector dispatch through the rotation identity
// outside.  All internal arithmetic runs over the big-float layer so the
// seam and the cancellation-prone oscillatory sector stay at full double
// accuracy; results are rounded to complex doubles on return.

#include <complex>

namespace hahn {

struct AiryValues {
  std::complex<double> ai, ai_prime, bi, bi_prime;
};

AiryValues airy_all(std::complex<double> z);

// Scaled variant for log-space assembly.  exponent = Re((2/3) z^{3/2})
// (principal power); ai/ai_prime are premultiplied by e^{+exponent} and
// bi/bi_prime by e^{-exponent}, so each entry stays O(poly) even when the
// plain values over/underflow:
//   ai_plain = values.ai * e^{-exponent},  bi_plain = values.bi * e^{+exponent}.
struct ScaledAiry {
  AiryValues values;
  double exponent;
};

ScaledAiry airy_scaled(std::complex<double> z);

// second solution via the rotation connection; sign = +1 or -1 selects the
// two equivalent forms, which must agree
std::complex<double> bi_from_ai(std::complex<double> z, int sign = +1);

// test hook: force the series path (|z| <= 9 normally) or the expansion path
AiryValues airy_series_path(std::complex<double> z);
AiryValues airy_asymptotic_path(std::complex<double> z);

}  // namespace hahn
