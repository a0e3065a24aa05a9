#pragma once

// Thin RAII wrapper over MPFR reals plus a complex pair type.  Only the
// operations the oracle and the Airy kernel actually use are exposed; precision
// is per-value and propagates as max(precision of operands).

#include <mpfr.h>

#include <complex>
#include <string>
#include <utility>

namespace hahn {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(const char* s, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_str(v_, s, 10, MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  // log2 of |x|, saturating for zero; used by cancellation diagnostics
  double log2_abs() const {
    if (mpfr_zero_p(v_)) return -1e300;
    long e = mpfr_get_exp(v_);
    return static_cast<double>(e);
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec())); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec())); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec())); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec())); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
  }
  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

  static BigFloat pi(mpfr_prec_t prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

inline BigFloat abs(const BigFloat& a) { BigFloat r(a.prec()); mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline BigFloat sqrt(const BigFloat& a) { BigFloat r(a.prec()); mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline BigFloat log(const BigFloat& a) { BigFloat r(a.prec()); mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline BigFloat exp(const BigFloat& a) { BigFloat r(a.prec()); mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline BigFloat sin(const BigFloat& a) { BigFloat r(a.prec()); mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline BigFloat cos(const BigFloat& a) { BigFloat r(a.prec()); mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec())); mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r;
}
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(y.prec(), x.prec())); mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r;
}
inline BigFloat gamma(const BigFloat& a) { BigFloat r(a.prec()); mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN); return r; }
// log|Gamma(a)| with the sign of Gamma(a) reported separately
inline BigFloat lgamma_signed(const BigFloat& a, int* sign_out) {
  BigFloat r(a.prec());
  int s = 0;
  mpfr_lgamma(r.raw(), &s, a.raw(), MPFR_RNDN);
  if (sign_out) *sign_out = s;
  return r;
}
inline BigFloat pow_int(const BigFloat& a, long k) {
  BigFloat r(a.prec()); mpfr_pow_si(r.raw(), a.raw(), k, MPFR_RNDN); return r;
}

// Complex number over BigFloat; only the arithmetic the series/expansion code
// needs.  Branches follow the principal convention (arg in (-pi, pi]).
class BigComplex {
 public:
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
  explicit BigComplex(const BigFloat& r) : re(r), im(BigFloat(0.0, r.prec())) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& b) { return {s * b.re, s * b.im}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& s) { return {a.re / s, a.im / s}; }
  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
};

inline BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
inline BigFloat arg(const BigComplex& a) { return atan2(a.im, a.re); }
inline BigComplex exp(const BigComplex& a) {
  BigFloat m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}
inline BigComplex log(const BigComplex& a) { return {log(abs(a)), arg(a)}; }
// principal fractional power via polar form
inline BigComplex pow(const BigComplex& a, const BigFloat& p) {
  return exp(BigComplex(p * log(abs(a)), p * arg(a)));
}
inline BigComplex sqrt(const BigComplex& a) {
  mpfr_prec_t pr = a.prec();
  return pow(a, BigFloat(0.5, pr));
}

}  // namespace hahn
