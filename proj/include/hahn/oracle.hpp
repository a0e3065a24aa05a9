#pragma once

// Ground-truth evaluation of the discrete orthogonal family: the terminating
// hypergeometric sum, a three-term-recurrence cross-check, node weights,
// leading coefficients and monic values, all in configurable-precision
// arithmetic.  Everything downstream is tested against this module.

#include <vector>

#include "hahn/bigfloat.hpp"
#include "hahn/params.hpp"
#include "hahn/scaled.hpp"

namespace hahn {

// Q_n(x) as the terminating sum; retries with doubled precision when the
// alternating sum is detected to have cancelled too close to the noise floor.
BigComplex eval_Q_exact(const HahnParams& p, const BigComplex& x, PrecisionContext ctx);

// independent second oracle: forward three-term recurrence in the degree
BigComplex eval_Q_recurrence(const HahnParams& p, const BigComplex& x, PrecisionContext ctx);

// node weight at integer x in [0, N]
BigFloat eval_weight_rho(const HahnParams& p, long x, PrecisionContext ctx);

// rescaled weight on (0,1) via the Gamma-ratio form (double precision)
std::complex<double> eval_w_rescaled(const HahnParams& p, std::complex<double> z);

// leading coefficient of the rescaled polynomial, as a scaled value
LogComplex leading_coeff(const HahnParams& p, PrecisionContext ctx);

// monic rescaled polynomial value at z (degree-n, leading coefficient 1)
LogComplex eval_monic_exact(const HahnParams& p, const BigComplex& z, PrecisionContext ctx);
LogComplex eval_monic_exact(const HahnParams& p, std::complex<double> z, PrecisionContext ctx);

// Gram matrix G[n][m] = sum_k Q_n(k) Q_m(k) rho(k), 0 <= n,m <= n_max
std::vector<std::vector<BigFloat>> orthogonality_matrix(double alpha, double beta, long bigN,
                                                        long n_max, PrecisionContext ctx);

// closed-form squared norm of Q_n (the expected Gram diagonal)
BigFloat norm_closed_form(const HahnParams& p, PrecisionContext ctx);

}  // namespace hahn
