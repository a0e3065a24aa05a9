#pragma once

#include <algorithm>
#include <stdexcept>

#include <mpfr.h>

namespace hahn {

// Problem instance: weight exponents, node count N, degree n.
struct HahnParams {
  double alpha = 0.0;  // > -1
  double beta = 0.0;   // > -1
  long bigN = 1;       // number of nodes
  long n = 0;          // degree, 0 <= n <= bigN-1

  double c() const { return static_cast<double>(n) / static_cast<double>(bigN); }

  void validate() const {
    if (!(alpha > -1.0)) throw std::invalid_argument("alpha must be > -1");
    if (!(beta > -1.0)) throw std::invalid_argument("beta must be > -1");
    if (bigN < 1) throw std::invalid_argument("N must be >= 1");
    if (n < 0 || n > bigN - 1) throw std::invalid_argument("need 0 <= n <= N-1");
  }
};

struct PrecisionContext {
  mpfr_prec_t bits = 128;
};

// raised when the configured working precision cannot deliver a trustworthy
// result even after the automatic retry ladder
struct PrecisionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The alternating terminating sum loses O(n) bits to cancellation; size the
// working precision so the result keeps >= ~14 accurate digits for n <= 512.
inline PrecisionContext default_precision(long n) {
  return {std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(6 * n + 64))};
}

// global override hook (set from HAHN_ASYM_PRECISION_BITS / --precision-bits)
inline mpfr_prec_t& precision_override() {
  static mpfr_prec_t bits = 0;  // 0 = no override
  return bits;
}

inline PrecisionContext effective_precision(long n) {
  if (precision_override() > 0) return {precision_override()};
  return default_precision(n);
}

}  // namespace hahn
