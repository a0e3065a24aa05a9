#include "hahn/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hahn {

namespace {

// alpha, beta and the integer offsets are each exact; summing them in MPFR
// keeps the Pochhammer factors exact, which matters wherever the alternating
// sum cancels far below its peak (a double-rounded composite would inject
// peak-sized noise there)
BigFloat param_plus(double param, double whole, mpfr_prec_t pr) {
  return BigFloat(param, pr) + BigFloat(whole, pr);
}

BigFloat params_plus(double pa, double pb, double whole, mpfr_prec_t pr) {
  return BigFloat(pa, pr) + BigFloat(pb, pr) + BigFloat(whole, pr);
}

}  // namespace

// Terminating sum with cancellation watch: if the alternating terms peak more
// than 2^{bits-48} above the result, the pass is rerun at doubled precision.
BigComplex eval_Q_exact(const HahnParams& p, const BigComplex& x, PrecisionContext ctx) {
  p.validate();
  mpfr_prec_t bits = ctx.bits;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const mpfr_prec_t pr = bits;
    BigComplex sum(1.0, 0.0, pr);
    BigComplex term(1.0, 0.0, pr);
    double peak = 0.0;
    const double a = p.alpha, b = p.beta;
    for (long k = 0; k < p.n; ++k) {
      BigComplex num = BigComplex(BigFloat(static_cast<double>(-p.n + k), pr)) *
                       (BigComplex(BigFloat(static_cast<double>(k), pr)) - x);
      num = num * BigComplex(params_plus(a, b, static_cast<double>(p.n + 1 + k), pr));
      BigFloat den = BigFloat(static_cast<double>(-p.bigN + k), pr) *
                     param_plus(a, static_cast<double>(1 + k), pr) *
                     BigFloat(static_cast<double>(k + 1), pr);
      term = (term * num) / BigComplex(den);
      sum += term;
      peak = std::max(peak, abs(term).log2_abs());
    }
    // an exact zero can only arise from exact cancellation of the (exactly
    // constructed) terms, e.g. at a node that is a root; accept it
    if (abs(sum).is_zero()) return sum;
    double result_log2 = abs(sum).log2_abs();
    if (peak - result_log2 + 48.0 <= static_cast<double>(bits)) return sum;
    bits *= 2;  // detected cancellation beyond the guard margin: retry wider
  }
  throw PrecisionFailure("terminating sum cancelled past the guard margin at the widest retry");
}

BigComplex eval_Q_recurrence(const HahnParams& p, const BigComplex& x, PrecisionContext ctx) {
  p.validate();
  const mpfr_prec_t pr = ctx.bits;
  const double a = p.alpha, b = p.beta;
  const double N = static_cast<double>(p.bigN);
  BigComplex qkm1(1.0, 0.0, pr);  // Q_0
  if (p.n == 0) return qkm1;
  // Q_1 from the sum definition's k=1 term
  BigComplex q1 = BigComplex(BigFloat(1.0, pr)) -
                  BigComplex(params_plus(a, b, 2.0, pr)) * x /
                      BigComplex(param_plus(a, 1.0, pr) * BigFloat(N, pr));
  if (p.n == 1) return q1;
  BigComplex qk = q1;
  for (long k = 1; k < p.n; ++k) {
    double kk = static_cast<double>(k);
    BigFloat Ak = params_plus(a, b, kk + 1, pr) * param_plus(a, kk + 1, pr) *
                  BigFloat(N - kk, pr) /
                  (params_plus(a, b, 2 * kk + 1, pr) * params_plus(a, b, 2 * kk + 2, pr));
    BigFloat Ck = BigFloat(kk, pr) * params_plus(a, b, kk + N + 1, pr) *
                  param_plus(b, kk, pr) /
                  (params_plus(a, b, 2 * kk, pr) * params_plus(a, b, 2 * kk + 1, pr));
    // -x Q_k = A_k Q_{k+1} - (A_k + C_k) Q_k + C_k Q_{k-1}
    BigComplex qkp1 =
        ((BigComplex(Ak + Ck) - x) * qk - BigComplex(Ck) * qkm1) / BigComplex(Ak);
    qkm1 = qk;
    qk = qkp1;
  }
  return qk;
}

BigFloat eval_weight_rho(const HahnParams& p, long x, PrecisionContext ctx) {
  if (x < 0 || x > p.bigN) throw std::domain_error("weight node out of range");
  const mpfr_prec_t pr = ctx.bits;
  // (alpha+1)_x / x!  *  (beta+1)_{N-x} / (N-x)!   via log-gamma
  auto lg = [&](const BigFloat& v) { return lgamma_signed(v, nullptr); };
  BigFloat lognum = lg(param_plus(p.alpha, static_cast<double>(1 + x), pr)) -
                    lg(param_plus(p.alpha, 1.0, pr)) -
                    lg(BigFloat(static_cast<double>(x + 1), pr)) +
                    lg(param_plus(p.beta, static_cast<double>(1 + p.bigN - x), pr)) -
                    lg(param_plus(p.beta, 1.0, pr)) -
                    lg(BigFloat(static_cast<double>(p.bigN - x + 1), pr));
  return exp(lognum);
}

std::complex<double> eval_w_rescaled(const HahnParams& p, std::complex<double> z) {
  // Gamma(Nz+a+1/2) Gamma(N(1-z)+b+1/2) / (N^{a+b} Gamma(Nz+1/2) Gamma(N(1-z)+1/2))
  // evaluated through real MPFR lgamma on the real axis and the complex
  // log-gamma elsewhere; the acceptance uses real z only, so route through
  // MPFR for accuracy and keep the imaginary part exact-zero there.
  const double N = static_cast<double>(p.bigN);
  if (z.imag() == 0.0) {
    const mpfr_prec_t pr = 256;
    auto lg = [&](double v) {
      if (v <= 0.0 && v == std::floor(v)) throw std::domain_error("weight pole");
      return lgamma_signed(BigFloat(v, pr), nullptr);
    };
    double x = z.real();
    BigFloat r = lg(N * x + p.alpha + 0.5) + lg(N * (1 - x) + p.beta + 0.5) -
                 lg(N * x + 0.5) - lg(N * (1 - x) + 0.5) -
                 BigFloat(p.alpha + p.beta, pr) * log(BigFloat(N, pr));
    return {exp(r).to_double(), 0.0};
  }
  throw std::domain_error("rescaled weight implemented for real z only");
}

LogComplex leading_coeff(const HahnParams& p, PrecisionContext ctx) {
  const mpfr_prec_t pr = ctx.bits;
  // N^n (n+a+b+1)_n / ((a+1)_n (-N+1)_n), running product keeps exact signs
  BigFloat num(1.0, pr), den(1.0, pr);
  for (long k = 0; k < p.n; ++k) {
    num *= BigFloat(static_cast<double>(p.bigN), pr);
    num *= params_plus(p.alpha, p.beta, static_cast<double>(p.n + 1 + k), pr);
    den *= param_plus(p.alpha, static_cast<double>(1 + k), pr);
    den *= BigFloat(static_cast<double>(-p.bigN + 1 + k), pr);
  }
  if (den.is_zero()) throw std::domain_error("degenerate leading coefficient (n >= N)");
  return LogComplex::from_big(BigComplex(num / den));
}

LogComplex eval_monic_exact(const HahnParams& p, const BigComplex& z, PrecisionContext ctx) {
  const mpfr_prec_t pr = ctx.bits;
  HahnParams shifted = p;
  shifted.bigN = p.bigN - 1;  // the rescaled family evaluates Q with N-1 nodes
  BigComplex x = BigFloat(static_cast<double>(p.bigN), pr) * z -
                 BigComplex(BigFloat(0.5, pr));
  BigComplex q = eval_Q_exact(shifted, x, ctx);
  return LogComplex::from_big(q) / leading_coeff(p, ctx);
}

LogComplex eval_monic_exact(const HahnParams& p, std::complex<double> z, PrecisionContext ctx) {
  return eval_monic_exact(p, BigComplex(z.real(), z.imag(), ctx.bits), ctx);
}

std::vector<std::vector<BigFloat>> orthogonality_matrix(double alpha, double beta, long bigN,
                                                        long n_max, PrecisionContext ctx) {
  if (n_max >= bigN) throw std::domain_error("n_max must be < N");
  const mpfr_prec_t pr = ctx.bits;
  HahnParams base{alpha, beta, bigN, 0};
  // tabulate Q_n(k) for all degrees and nodes
  std::vector<std::vector<BigFloat>> qv(n_max + 1);
  std::vector<BigFloat> rho;
  rho.reserve(bigN + 1);
  for (long k = 0; k <= bigN; ++k) rho.push_back(eval_weight_rho(base, k, ctx));
  for (long d = 0; d <= n_max; ++d) {
    HahnParams p{alpha, beta, bigN, d};
    qv[d].reserve(bigN + 1);
    for (long k = 0; k <= bigN; ++k) {
      BigComplex v = eval_Q_exact(p, BigComplex(static_cast<double>(k), 0.0, pr), ctx);
      qv[d].push_back(v.re);
    }
  }
  std::vector<std::vector<BigFloat>> G(n_max + 1, std::vector<BigFloat>(n_max + 1, BigFloat(pr)));
  for (long i = 0; i <= n_max; ++i)
    for (long j = 0; j <= n_max; ++j) {
      BigFloat s(0.0, pr);
      for (long k = 0; k <= bigN; ++k) s += qv[i][k] * qv[j][k] * rho[k];
      G[i][j] = s;
    }
  return G;
}

BigFloat norm_closed_form(const HahnParams& p, PrecisionContext ctx) {
  const mpfr_prec_t pr = ctx.bits;
  const double a = p.alpha, b = p.beta;
  // (-1)^n (n+a+b+1)_{N+1} (b+1)_n n! / [(2n+a+b+1)(a+1)_n (-N)_n N!]
  BigFloat num(1.0, pr), den(1.0, pr);
  for (long k = 0; k <= p.bigN; ++k)
    num *= params_plus(a, b, static_cast<double>(p.n + 1 + k), pr);
  for (long k = 0; k < p.n; ++k) {
    num *= param_plus(b, static_cast<double>(1 + k), pr);
    num *= BigFloat(static_cast<double>(k + 1), pr);
    den *= param_plus(a, static_cast<double>(1 + k), pr);
    den *= BigFloat(static_cast<double>(-p.bigN + k), pr);
  }
  den *= params_plus(a, b, static_cast<double>(2 * p.n + 1), pr);
  for (long k = 1; k <= p.bigN; ++k) den *= BigFloat(static_cast<double>(k), pr);
  BigFloat r = num / den;
  if (p.n % 2 == 1) r = -r;
  return r;
}

}  // namespace hahn
