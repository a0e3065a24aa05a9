#include "hahn/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "hahn/airy.hpp"
#include "hahn/oracle.hpp"

namespace hahn {

namespace {
using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);

LogComplex exp_log(cplx log_value) {
  return {log_value.real(), std::exp(kI * log_value.imag())};
}

LogComplex real_scale(double logmag) { return {logmag, {1.0, 0.0}}; }

LogComplex parity(long k) {
  return {0.0, {(k % 2 == 0) ? 1.0 : -1.0, 0.0}};
}

// Airy values at a polar-carried argument, as scaled LogComplex entries
struct AiryLog {
  LogComplex ai, ai_prime, bi, bi_prime;
};

AiryLog airy_log(const PolarPower& xi) {
  ScaledAiry s = airy_scaled(xi.value());
  AiryLog r;
  r.ai = LogComplex{-s.exponent, 1.0} * LogComplex::from_value(s.values.ai);
  r.ai_prime = LogComplex{-s.exponent, 1.0} * LogComplex::from_value(s.values.ai_prime);
  r.bi = LogComplex{s.exponent, 1.0} * LogComplex::from_value(s.values.bi);
  r.bi_prime = LogComplex{s.exponent, 1.0} * LogComplex::from_value(s.values.bi_prime);
  return r;
}

LogComplex from_polar(const PolarPower& p) {
  if (p.modulus == 0.0) return LogComplex::zero();
  return {std::log(p.modulus), std::exp(cplx(0.0, p.argument))};
}

}  // namespace

RegionTag classify(const MapBundle& b, cplx z) {
  RegionTag t;
  double re = z.real(), im = z.imag();
  t.half_plane = (im > 0.0) ? 1 : (im < 0.0 ? -1 : 0);
  bool inside_K = (re > b.x1) && (re < 1.0 - b.x1) && (std::abs(im) < b.delta);
  t.in_lens = (re > b.eq.a) && (re < b.eq.b) && (im != 0.0) && (std::abs(im) < b.lens_height);
  if (!inside_K) {
    t.region = Region::I;
  } else if (re <= b.x0) {
    t.region = Region::II;  // the split line itself goes left
  } else {
    t.region = Region::III;
  }
  t.side_of_split = (re < b.x0) ? -1 : (re > b.x0 ? 1 : 0);
  return t;
}

AsymptoticResult asym_region_I(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  long n = b.params.n;
  cplx ph = phi(b, zz);
  LogComplex value = real_scale(n * b.eq.l / 2.0) * factor_D_switch(b, zz) *
                     exp_log(-static_cast<double>(n) * ph) *
                     LogComplex::from_value(m_value(b, zz));
  AsymptoticResult r;
  r.value = value;
  r.region = Region::I;
  RegionTag t = classify(b, zz);
  if (t.in_lens) {
    double amax = std::max(b.params.alpha, b.params.beta);
    r.correction_bound_log = amax * std::log(static_cast<double>(b.params.bigN)) +
                             n * ph.real();
  }
  return r;
}

namespace {

// shared Airy-region assembly; `right_edge` selects the map anchored at b and
// the swapped trig/combination pattern
AsymptoticResult airy_assembly(const MapBundle& b, cplx z, Side side, bool right_edge) {
  cplx zz = with_side(z, side);
  long n = b.params.n, N = b.params.bigN;
  PolarPower xi = right_edge ? xi_right(b, zz, n) : xi_left(b, zz, n);
  LogComplex q = from_polar(xi.pow(0.25));
  cplx m = m_value(b, zz), ms = m_star_value(b, zz);
  LogComplex sinv = sin_scaled(N, z), cosv = cos_scaled(N, z);
  AiryLog airy = airy_log(xi);
  LogComplex A, B;
  if (!right_edge) {
    A = q * LogComplex::from_value(m + ms) * (sinv * airy.ai + cosv * airy.bi);
    B = LogComplex::from_value(m - ms) / q * (sinv * airy.ai_prime + cosv * airy.bi_prime);
  } else {
    A = q * LogComplex::from_value(m - ms) * (cosv * airy.bi - sinv * airy.ai);
    B = LogComplex::from_value(m + ms) / q * (cosv * airy.bi_prime - sinv * airy.ai_prime);
  }
  LogComplex pref = parity(right_edge ? N : n) *
                    LogComplex::from_value({std::sqrt(M_PI), 0.0}) *
                    real_scale(n * b.eq.l / 2.0);
  AsymptoticResult r;
  r.value = pref * (A + B);
  r.region = right_edge ? Region::III : Region::II;
  return r;
}

}  // namespace

AsymptoticResult asym_region_II(const MapBundle& b, cplx z, Side side) {
  return airy_assembly(b, z, side, false);
}

AsymptoticResult asym_region_III(const MapBundle& b, cplx z, Side side) {
  return airy_assembly(b, z, side, true);
}

AsymptoticResult asym_auto(const MapBundle& b, cplx z, Side side) {
  switch (classify(b, z).region) {
    case Region::I: return asym_region_I(b, z, side);
    case Region::II: return asym_region_II(b, z, side);
    default: return asym_region_III(b, z, side);
  }
}

LogComplex asym_fixed_x(const HahnParams& p, double x) {
  if (x == -0.5) throw std::domain_error("fixed argument -1/2 separates the formula branches");
  double a = p.alpha, bb = p.beta, c = p.c();
  double n = static_cast<double>(p.n), N = static_cast<double>(p.bigN);
  if (x > -0.5 && x == std::floor(x)) return LogComplex::zero();  // sin(pi x) = 0
  // common log-magnitude pieces
  double common = std::lgamma(a + 1.0) + std::lgamma(N - n) - std::lgamma(N) - n -
                  (2.0 * x + 2.0 * a + 2.0) * std::log(n) +
                  (n + N + a + bb + 0.5) * std::log(1.0 + c) +
                  (x + n + a + 1.0) * std::log(N);
  if (x > -0.5) {
    double tail = std::lgamma(x + 1.0);
    double s = std::sin(M_PI * x);
    // value = -(1/pi) * e^{common+tail} * s
    LogComplex r{common + tail + std::log(std::abs(s) / M_PI), {(s > 0) ? -1.0 : 1.0, 0.0}};
    return r;
  }
  // x < -1/2: replace Gamma(x+1) sin(pi x)/(-pi) by 1/Gamma(-x)
  double tail = -std::lgamma(-x);
  return {common + tail, {1.0, 0.0}};
}

LogComplex monic_to_Q(const HahnParams& p, const LogComplex& monic_value) {
  return monic_value * leading_coeff(p, {256});
}

LogComplex Q_to_monic(const HahnParams& p, const LogComplex& q_value) {
  return q_value / leading_coeff(p, {256});
}

namespace {

void require_chebyshev(const MapBundle& b) {
  if (b.params.alpha != 0.0 || b.params.beta != 0.0)
    throw std::domain_error("reduction check requires alpha = beta = 0");
}

cplx cpow(cplx base, double expo) { return std::exp(expo * std::log(base)); }

}  // namespace

double chebyshev_residual_band(const MapBundle& b, cplx z, Side side) {
  require_chebyshev(b);
  cplx zz = with_side(z, side);
  long n = b.params.n, N = b.params.bigN;
  // specialized surd prefactors replacing the m-combinations
  cplx qa = cpow(zz - b.eq.a, 0.25), qb = cpow(zz - b.eq.b, 0.25);
  cplx sum_pref = qb / qa;   // m + m* at zero exponents
  cplx diff_pref = qa / qb;  // m - m*
  PolarPower xi = xi_left(b, zz, n);
  LogComplex q = from_polar(xi.pow(0.25));
  LogComplex sinv = sin_scaled(N, z), cosv = cos_scaled(N, z);
  AiryLog airy = airy_log(xi);
  LogComplex A = q * LogComplex::from_value(sum_pref) * (sinv * airy.ai + cosv * airy.bi);
  LogComplex B =
      LogComplex::from_value(diff_pref) / q * (sinv * airy.ai_prime + cosv * airy.bi_prime);
  LogComplex special = parity(n) * LogComplex::from_value({std::sqrt(M_PI), 0.0}) *
                       real_scale(n * b.eq.l / 2.0) * (A + B);
  LogComplex general = asym_region_II(b, z, side).value;
  return relative_error(general, special);
}

double chebyshev_residual_left_negative(const MapBundle& b, double x) {
  require_chebyshev(b);
  if (!(x < 0.0)) throw std::domain_error("this reduction applies left of the interval");
  cplx zz(x, 0.0);
  long n = b.params.n;
  cplx sa = std::sqrt(zz - b.eq.a), sb = std::sqrt(zz - b.eq.b);
  cplx m0 = (sa + sb) / (2.0 * cpow(zz - b.eq.a, 0.25) * cpow(zz - b.eq.b, 0.25));
  LogComplex special = factor_D_star(b, zz) *
                       exp_log(static_cast<double>(n) * (b.eq.l / 2.0 - phi(b, zz))) *
                       LogComplex::from_value(m0);
  LogComplex general = asym_region_I(b, zz).value;
  return relative_error(general, special);
}

double chebyshev_residual_left_saturated(const MapBundle& b, double x) {
  require_chebyshev(b);
  if (!(x > 0.0 && x < b.x1))
    throw std::domain_error("this reduction applies on the saturated stretch left of K");
  long n = b.params.n, N = b.params.bigN;
  cplx zz(x, 0.0);
  cplx sa = std::sqrt(zz - b.eq.a + cplx(0.0, 0.0)), sb = std::sqrt(zz - b.eq.b);
  // with a side pin: the quartic roots need the upper limit to match phi_left
  cplx zp = with_side(zz, Side::Plus);
  sa = std::sqrt(zp - b.eq.a);
  sb = std::sqrt(zp - b.eq.b);
  cplx m0 = (sa + sb) / (2.0 * cpow(zp - b.eq.a, 0.25) * cpow(zp - b.eq.b, 0.25));
  cplx pl = phi_left(b, zz, Side::Plus);  // real and negative here
  LogComplex special = parity(n) * LogComplex{0.0, {2.0, 0.0}} *
                       real_scale(n * (b.eq.l / 2.0 - pl.real())) * factor_D(b, zz) *
                       cos_scaled(N, zz) * LogComplex::from_value(m0);
  LogComplex general = asym_region_I(b, zz, Side::Plus).value;
  return relative_error(general, special);
}

}  // namespace hahn
