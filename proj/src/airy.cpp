#include "hahn/airy.hpp"

#include <cmath>

#include "hahn/bigfloat.hpp"

namespace hahn {

namespace {

constexpr mpfr_prec_t kPrec = 320;

struct BigAiry {
  BigComplex ai, aip;
  BigAiry() : ai(kPrec), aip(kPrec) {}
};

BigFloat bf(double x) { return BigFloat(x, kPrec); }

BigComplex rot_unit(int thirds) {
  // e^{i * thirds * 2 pi / 3}
  BigFloat t = bf(2.0 * thirds) * BigFloat::pi(kPrec) / bf(3.0);
  return {cos(t), sin(t)};
}

// the constants 1/(3^{2/3} Gamma(2/3)) and 1/(3^{1/3} Gamma(1/3)); the 1/3
// exponents are formed by big-float division so no double-rounded rational
// leaks into the e^{20}-sized Maclaurin cancellation
void series_constants(BigFloat& c1, BigFloat& c2) {
  BigFloat third = bf(1.0) / bf(3.0);
  c1 = exp(-log(bf(3.0)) * (third + third)) / gamma(third + third);
  c2 = exp(-log(bf(3.0)) * third) / gamma(third);
}

// Maclaurin solutions f, g of w'' = z w and their derivatives
void maclaurin_fg(const BigComplex& z, BigComplex& f, BigComplex& g, BigComplex& fp,
                  BigComplex& gp) {
  BigComplex z3 = z * z * z;
  BigComplex tf(1.0, 0.0, kPrec);  // term of f, k = 0
  BigComplex tg = z;               // term of g, k = 0
  f = tf;
  g = tg;
  fp = BigComplex(0.0, 0.0, kPrec);
  gp = BigComplex(1.0, 0.0, kPrec);
  bool z_zero = abs(z).is_zero();
  BigFloat tiny("1e-110", kPrec);
  for (long k = 0; k < 400; ++k) {
    double kk = static_cast<double>(k);
    tf = tf * z3 / BigComplex(bf((3 * kk + 2) * (3 * kk + 3)));
    tg = tg * z3 / BigComplex(bf((3 * kk + 3) * (3 * kk + 4)));
    f += tf;
    g += tg;
    if (!z_zero) {
      fp += tf * BigComplex(bf(3 * kk + 3)) / z;
      gp += tg * BigComplex(bf(3 * kk + 4)) / z;
    }
    if (abs(tf) + abs(tg) < tiny * (abs(f) + abs(g) + bf(1.0))) break;
  }
}

// Poincare expansion sums for Ai (valid |arg z| <= 2 pi / 3 after dispatch)
BigAiry ai_expansion(const BigComplex& z) {
  BigComplex half_pow = pow(z, bf(0.5));
  BigComplex zeta = BigComplex(bf(2.0) / bf(3.0)) * z * half_pow;  // (2/3) z^{3/2}
  BigComplex inv_zeta = BigComplex(bf(1.0)) / zeta;
  BigComplex s1(1.0, 0.0, kPrec), s2(1.0, 0.0, kPrec);
  BigFloat u(1.0, kPrec);
  BigComplex p(1.0, 0.0, kPrec);
  BigFloat prev = abs(p);
  for (long k = 1; k < 200; ++k) {
    double kk = static_cast<double>(k);
    u *= bf((6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1)) / bf((2 * kk - 1) * 216.0 * kk);
    p = p * inv_zeta;
    BigFloat mag = u * abs(p);
    if (mag > prev && k > 3) break;  // optimal truncation
    prev = mag;
    BigFloat sgn = (k % 2 == 1) ? bf(-1.0) : bf(1.0);
    BigFloat v = u * bf(6 * kk + 1) / bf(1 - 6 * kk);
    s1 += (sgn * u) * p;
    s2 += (sgn * v) * p;
    if (mag < BigFloat("1e-80", kPrec)) break;
  }
  BigComplex quarter_pow = pow(z, bf(0.25));
  BigFloat pref = bf(0.5) / sqrt(BigFloat::pi(kPrec));
  BigComplex em = exp(-zeta);
  BigAiry r;
  r.ai = (pref * em) * s1 / quarter_pow;
  r.aip = -(pref * em) * quarter_pow * s2;
  return r;
}

BigAiry ai_series(const BigComplex& z) {
  BigComplex f(kPrec), g(kPrec), fp(kPrec), gp(kPrec);
  maclaurin_fg(z, f, g, fp, gp);
  BigFloat c1(kPrec), c2(kPrec);
  series_constants(c1, c2);
  BigAiry r;
  r.ai = c1 * f - c2 * g;
  r.aip = c1 * fp - c2 * gp;
  return r;
}

BigAiry ai_dispatch(const BigComplex& z) {
  double az = abs(z).to_double();
  if (az <= 9.0) return ai_series(z);
  double ph = arg(z).to_double();
  if (std::abs(ph) <= 2.0 * M_PI / 3.0 + 1e-13) return ai_expansion(z);
  // rotate into the two adjacent sectors: Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z)
  // with w = e^{+-2 pi i/3}; both rotated arguments land in the direct sector
  BigComplex w1 = rot_unit(1), w2 = rot_unit(-1);
  BigAiry a1 = ai_expansion(z * w1);
  BigAiry a2 = ai_expansion(z * w2);
  BigAiry r;
  r.ai = -(w1 * a1.ai) - (w2 * a2.ai);
  r.aip = -(w1 * w1 * a1.aip) - (w2 * w2 * a2.aip);
  return r;
}

struct BigAiryAll {
  BigComplex ai, aip, bi, bip;
  BigAiryAll() : ai(kPrec), aip(kPrec), bi(kPrec), bip(kPrec) {}
};

BigAiryAll airy_all_big(const BigComplex& z) {
  BigAiryAll r;
  double az = abs(z).to_double();
  if (az <= 9.0) {
    BigComplex f(kPrec), g(kPrec), fp(kPrec), gp(kPrec);
    maclaurin_fg(z, f, g, fp, gp);
    BigFloat c1(kPrec), c2(kPrec);
    series_constants(c1, c2);
    BigFloat s3 = sqrt(bf(3.0));
    r.ai = c1 * f - c2 * g;
    r.aip = c1 * fp - c2 * gp;
    r.bi = s3 * (c1 * f + c2 * g);
    r.bip = s3 * (c1 * fp + c2 * gp);
    return r;
  }
  BigAiry a = ai_dispatch(z);
  // Bi(z) = e^{i pi/6} Ai(z w) + e^{-i pi/6} Ai(z w^{-1}),  w = e^{2 pi i/3}
  BigComplex w1 = rot_unit(1), w2 = rot_unit(-1);
  BigFloat sixth = BigFloat::pi(kPrec) / bf(6.0);
  BigComplex e_p(cos(sixth), sin(sixth));
  BigComplex e_m(cos(sixth), -sin(sixth));
  BigAiry b1 = ai_dispatch(z * w1);
  BigAiry b2 = ai_dispatch(z * w2);
  r.ai = a.ai;
  r.aip = a.aip;
  r.bi = e_p * b1.ai + e_m * b2.ai;
  r.bip = e_p * w1 * b1.aip + e_m * w2 * b2.aip;
  return r;
}

AiryValues round_down(const BigAiryAll& b) {
  return {b.ai.to_complex(), b.aip.to_complex(), b.bi.to_complex(), b.bip.to_complex()};
}

}  // namespace

AiryValues airy_all(std::complex<double> z) {
  BigComplex zb(z.real(), z.imag(), kPrec);
  return round_down(airy_all_big(zb));
}

ScaledAiry airy_scaled(std::complex<double> z) {
  BigComplex zb(z.real(), z.imag(), kPrec);
  BigAiryAll b = airy_all_big(zb);
  BigComplex zeta = BigComplex(bf(2.0) / bf(3.0)) * zb * pow(zb, bf(0.5));
  BigFloat e = zeta.re;
  BigFloat up = exp(e), dn = exp(-e);
  ScaledAiry r;
  r.exponent = e.to_double();
  r.values.ai = (up * b.ai).to_complex();
  r.values.ai_prime = (up * b.aip).to_complex();
  r.values.bi = (dn * b.bi).to_complex();
  r.values.bi_prime = (dn * b.bip).to_complex();
  return r;
}

std::complex<double> bi_from_ai(std::complex<double> z, int sign) {
  BigComplex zb(z.real(), z.imag(), kPrec);
  // Bi(z) = +-i [2 e^{-+ pi i/3} Ai(w^{+-1} z) - Ai(z)]
  BigComplex w = rot_unit(sign);
  BigFloat third = BigFloat::pi(kPrec) / bf(3.0);
  BigComplex phase(cos(third), (sign > 0) ? -sin(third) : sin(third));
  BigAiry rot = ai_dispatch(zb * w);
  BigAiry at = ai_dispatch(zb);
  BigComplex i_unit(0.0, static_cast<double>(sign), kPrec);
  BigComplex bi = i_unit * (BigComplex(bf(2.0)) * phase * rot.ai - at.ai);
  return bi.to_complex();
}

AiryValues airy_series_path(std::complex<double> z) {
  BigComplex zb(z.real(), z.imag(), kPrec);
  BigAiryAll r;
  BigComplex f(kPrec), g(kPrec), fp(kPrec), gp(kPrec);
  maclaurin_fg(zb, f, g, fp, gp);
  BigFloat c1(kPrec), c2(kPrec);
  series_constants(c1, c2);
  BigFloat s3 = sqrt(bf(3.0));
  r.ai = c1 * f - c2 * g;
  r.aip = c1 * fp - c2 * gp;
  r.bi = s3 * (c1 * f + c2 * g);
  r.bip = s3 * (c1 * fp + c2 * gp);
  return round_down(r);
}

AiryValues airy_asymptotic_path(std::complex<double> z) {
  BigComplex zb(z.real(), z.imag(), kPrec);
  double ph = std::arg(z);
  BigAiry a = (std::abs(ph) <= 2.0 * M_PI / 3.0 + 1e-13) ? ai_expansion(zb)
                                                         : ai_dispatch(zb);
  BigComplex w1 = rot_unit(1), w2 = rot_unit(-1);
  BigFloat sixth = BigFloat::pi(kPrec) / bf(6.0);
  BigComplex e_p(cos(sixth), sin(sixth));
  BigComplex e_m(cos(sixth), -sin(sixth));
  BigAiry b1 = ai_dispatch(zb * w1);
  BigAiry b2 = ai_dispatch(zb * w2);
  BigAiryAll r;
  r.ai = a.ai;
  r.aip = a.aip;
  r.bi = e_p * b1.ai + e_m * b2.ai;
  r.bip = e_p * w1 * b1.aip + e_m * w2 * b2.aip;
  return round_down(r);
}

}  // namespace hahn
