#pragma once

// Adaptive Gauss-Legendre quadrature for complex-valued integrands on real
// intervals.  Panels are bisected until a fixed-order estimate stabilizes;
// callers split at interior singular points themselves and use the sin^2
// substitution helper for inverse-square-root endpoint behavior.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace hahn {

namespace detail {

struct GLRule {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

// Newton iteration on the Legendre recurrence; order is small so cost is nil
inline GLRule gauss_legendre(int order) {
  GLRule r;
  r.x.resize(order);
  r.w.resize(order);
  for (int i = 0; i < order; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= order; ++k) {
      double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (t * p1 - p0) / (t * t - 1.0);
    r.x[i] = t;
    r.w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return r;
}

inline const GLRule& rule16() {
  static const GLRule r = gauss_legendre(16);
  return r;
}

}  // namespace detail

using Integrand = std::function<std::complex<double>(double)>;

inline std::complex<double> gl_panel(const Integrand& f, double lo, double hi) {
  const auto& r = detail::rule16();
  std::complex<double> s = 0.0;
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
  return s * half;
}

inline std::complex<double> integrate_adaptive(const Integrand& f, double lo, double hi,
                                               double abs_tol = 1e-12, int depth = 0) {
  std::complex<double> whole = gl_panel(f, lo, hi);
  double mid = 0.5 * (lo + hi);
  std::complex<double> split = gl_panel(f, lo, mid) + gl_panel(f, mid, hi);
  if (std::abs(whole - split) < abs_tol || depth >= 40) return split;
  return integrate_adaptive(f, lo, mid, abs_tol / 2, depth + 1) +
         integrate_adaptive(f, mid, hi, abs_tol / 2, depth + 1);
}

// integrate f over [lo, hi] where f ~ 1/sqrt((s-lo)(hi-s)) at the ends:
// s = lo + (hi-lo) sin^2(theta) turns both endpoint singularities analytic
inline std::complex<double> integrate_edge_singular(const Integrand& f, double lo, double hi,
                                                    double abs_tol = 1e-12) {
  double len = hi - lo;
  Integrand g = [&](double th) {
    double s = lo + len * std::sin(th) * std::sin(th);
    return f(s) * (2.0 * len * std::sin(th) * std::cos(th));
  };
  return integrate_adaptive(g, 0.0, M_PI / 2, abs_tol);
}

}  // namespace hahn
