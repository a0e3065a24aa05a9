#include "hahn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "hahn/airy.hpp"
#include "hahn/asymptotics.hpp"
#include "hahn/equilibrium.hpp"
#include "hahn/maps.hpp"
#include "hahn/oracle.hpp"
#include "hahn/parametrix.hpp"
#include "hahn/quadrature.hpp"

namespace hahn {

namespace {

using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);
const cplx kOmega = std::exp(cplx(0.0, 2.0 * M_PI / 3.0));

struct Collector {
  std::vector<InvariantResult> results;
  const VerifyOptions* opt;

  bool wants(const std::string& id) const {
    return opt->filter.empty() || id.find(opt->filter) != std::string::npos;
  }

  void run(const std::string& id, double tol, const std::function<double()>& body) {
    if (!wants(id)) return;
    double res = body();
    results.push_back({id, res, tol, res < tol});
  }
};

double rel(cplx got, cplx want) {
  double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

// ---------------------------------------------------------------- oracle ----

double check_orthogonality(double alpha, double beta, long bigN, long n_max) {
  PrecisionContext ctx{256};
  auto G = orthogonality_matrix(alpha, beta, bigN, n_max, ctx);
  double worst = 0.0;
  for (long i = 0; i <= n_max; ++i) {
    HahnParams p{alpha, beta, bigN, i};
    BigFloat want = norm_closed_form(p, ctx);
    double diag = ((G[i][i] - want) / want).to_double();
    worst = std::max(worst, std::abs(diag));
    for (long j = 0; j <= n_max; ++j) {
      if (i == j) continue;
      worst = std::max(worst, std::abs((G[i][j] / want).to_double()));
    }
  }
  return worst;
}

double check_recurrence_agreement() {
  double worst = 0.0;
  PrecisionContext ctx{256};
  for (auto [a, b, N] : {std::tuple{0.0, 0.0, 8L}, {0.5, 1.5, 10L}, {0.3, 0.7, 16L}}) {
    for (long n : {2L, 5L, 7L}) {
      HahnParams p{a, b, N, n};
      for (cplx x : {cplx(1.3, 0.0), cplx(4.2, 0.0), cplx(2.5, 1.5)}) {
        BigComplex xb(x.real(), x.imag(), ctx.bits);
        BigComplex v1 = eval_Q_exact(p, xb, ctx);
        BigComplex v2 = eval_Q_recurrence(p, xb, ctx);
        worst = std::max(worst, rel(v1.to_complex(), v2.to_complex()));
      }
    }
  }
  return worst;
}

double check_reflection_symmetry() {
  // Q_n(N-x; beta, alpha, N) = (-1)^n [(alpha+1)_n/(beta+1)_n] Q_n(x; alpha, beta, N)
  double worst = 0.0;
  PrecisionContext ctx{256};
  const double alpha = 0.3, beta = 0.7;
  const long N = 12;
  for (long n : {1L, 3L, 6L}) {
    double ratio = 1.0;
    for (long k = 0; k < n; ++k) ratio *= (alpha + 1 + k) / (beta + 1 + k);
    if (n % 2 == 1) ratio = -ratio;
    for (double x : {0.7, 2.2, 5.9}) {
      HahnParams pr{beta, alpha, N, n};
      HahnParams pl{alpha, beta, N, n};
      cplx lhs = eval_Q_exact(pr, BigComplex(N - x, 0.0, ctx.bits), ctx).to_complex();
      cplx rhs = ratio * eval_Q_exact(pl, BigComplex(x, 0.0, ctx.bits), ctx).to_complex();
      worst = std::max(worst, rel(lhs, rhs));
    }
  }
  return worst;
}

// ----------------------------------------------------------- equilibrium ----

double check_endpoint_algebra() {
  double worst = 0.0;
  for (double c : {0.2, 0.5, 0.8}) {
    auto [a, b] = mrs_endpoints(c);
    worst = std::max(worst, std::abs(a + b - 1.0));
    worst = std::max(worst, std::abs(a * b - c * c / 4.0));
  }
  return worst;
}

double check_density_mass() {
  double worst = 0.0;
  for (double c : {0.2, 0.5, 0.8}) {
    auto [a, b] = mrs_endpoints(c);
    cplx band = integrate_adaptive([&](double s) { return cplx(density_mu(c, s), 0.0); }, a, b,
                                   1e-13);
    double total = (a + (1.0 - b)) / c + band.real();
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

double check_density_bounds() {
  double worst = 0.0;
  for (double c : {0.2, 0.5, 0.8}) {
    for (int i = 0; i <= 10000; ++i) {
      double x = static_cast<double>(i) / 10000.0;
      double mu = density_mu(c, x);
      if (mu < 0.0) worst = std::max(worst, -mu);
      if (mu > 1.0 / c) worst = std::max(worst, mu - 1.0 / c);
    }
  }
  return worst;
}

double check_band_log_integral() {
  double worst = 0.0;
  for (double c : {0.2, 0.5, 0.8}) {
    auto [a, b] = mrs_endpoints(c);
    cplx quad = integrate_edge_singular(
        [&](double s) { return cplx(std::log(s) / std::sqrt((s - a) * (b - s)), 0.0); }, a, b,
        1e-12);
    worst = std::max(worst, std::abs(quad.real() - log_integral_band(c)));
  }
  return worst;
}

double check_density_derivative() {
  double worst = 0.0;
  for (double c : {0.2, 0.5, 0.8}) {
    auto [a, b] = mrs_endpoints(c);
    for (int i = 1; i <= 9; ++i) {
      double x = a + (b - a) * i / 10.0;
      double h = 1e-6 * (b - a);
      double fd = (density_mu(c, x + h) - density_mu(c, x - h)) / (2.0 * h);
      double cl = density_mu_prime(c, x);
      worst = std::max(worst, std::abs(fd - cl) / std::max(1.0, std::abs(cl)));
    }
  }
  return worst;
}

// ------------------------------------------------------------ g-function ----

// direct quadrature of the defining integral of g against the density
cplx g_quadrature(double c, cplx z) {
  auto [a, b] = mrs_endpoints(c);
  auto f = [&](double s) { return std::log(z - s); };
  cplx left = integrate_adaptive([&](double s) { return f(s) / c; }, 0.0, a, 1e-12);
  cplx right = integrate_adaptive([&](double s) { return f(s) / c; }, b, 1.0, 1e-12);
  cplx band =
      integrate_adaptive([&](double s) { return f(s) * density_mu(c, s); }, a, b, 1e-12);
  return left + band + right;
}

std::vector<cplx> half_plane_cloud(std::mt19937& rng, int count, int sign) {
  std::uniform_real_distribution<double> ur(-0.8, 1.8), ui(0.05, 1.2);
  std::vector<cplx> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.emplace_back(ur(rng), sign * ui(rng));
  return pts;
}

double check_g_quadrature() {
  std::mt19937 rng(12345);
  double worst = 0.0;
  for (double c : {0.5, 0.8}) {
    for (int sign : {+1, -1}) {
      for (cplx z : half_plane_cloud(rng, 13, sign)) {
        worst = std::max(worst, std::abs(g_explicit(c, z) - g_quadrature(c, z)));
      }
    }
  }
  return worst;
}

double check_g_derivative() {
  std::mt19937 rng(777);
  double worst = 0.0;
  const double h = 1e-6;
  for (double c : {0.2, 0.5, 0.8}) {
    for (int sign : {+1, -1}) {
      for (cplx z : half_plane_cloud(rng, 8, sign)) {
        cplx fd = (g_explicit(c, z + h) - g_explicit(c, z - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - g_prime_explicit(c, z)));
      }
    }
  }
  return worst;
}

double check_g_band_derivative_sum() {
  // the band is where the log potential's real part is pinned at l/2, so the
  // two boundary derivatives cancel exactly
  double worst = 0.0;
  for (double c : {0.2, 0.5, 0.8}) {
    auto [a, b] = mrs_endpoints(c);
    for (int i = 1; i <= 9; ++i) {
      double x = a + (b - a) * i / 10.0;
      cplx s = g_prime_explicit(c, {x, 0.0}, Side::Plus) +
               g_prime_explicit(c, {x, 0.0}, Side::Minus);
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

double check_g_prime_jump() {
  // g'_+ - g'_- = -2 pi i mu(x) across (0,1)
  double worst = 0.0;
  for (double c : {0.2, 0.5, 0.8}) {
    for (int i = 1; i <= 9; ++i) {
      double x = static_cast<double>(i) / 10.0;
      cplx jump = g_prime_explicit(c, {x, 0.0}, Side::Plus) -
                  g_prime_explicit(c, {x, 0.0}, Side::Minus);
      cplx want = -2.0 * M_PI * kI * density_mu(c, x);
      worst = std::max(worst, std::abs(jump - want));
    }
  }
  return worst;
}

// ------------------------------------------------------------ phase rows ----

// epsilon-limit toward the axis with one Richardson step; `sign` picks the
// half-plane.  The injected-bug control flips the approach side.
cplx eps_limit(const std::function<cplx(cplx)>& f, double x, int sign, bool bug) {
  if (bug) sign = -sign;
  const double eps = 1e-8;
  cplx f1 = f({x, sign * eps});
  cplx f2 = f({x, sign * 2.0 * eps});
  return 2.0 * f1 - f2;
}

struct RowCheck {
  double lo, hi;                              // open interval sampled at 10 interior points
  std::function<double(double, cplx)> resid;  // (x, limit value) -> residual
};

double run_rows(const MapBundle& bundle, const std::function<cplx(cplx)>& f,
                const std::vector<std::pair<int, RowCheck>>& rows, bool bug) {
  double worst = 0.0;
  for (const auto& [sign, row] : rows) {
    for (int i = 1; i <= 10; ++i) {
      double x = row.lo + (row.hi - row.lo) * i / 11.0;
      cplx v = eps_limit(f, x, sign, bug);
      worst = std::max(worst, row.resid(x, v));
    }
  }
  (void)bundle;
  return worst;
}

double check_rows_phi_left(const MapBundle& bundle, bool bug) {
  const double a = bundle.eq.a, b = bundle.eq.b, c = bundle.eq.c;
  auto f = [&](cplx z) { return phi_left(bundle, z); };
  std::vector<std::pair<int, RowCheck>> rows;
  for (int s : {+1, -1}) {
    double ds = static_cast<double>(s);
    // (-inf, 0): Im = -s pi x / c
    rows.push_back({s, {-2.0, 0.0, [=](double x, cplx v) {
                          return std::abs(v.imag() + ds * M_PI * x / c);
                        }}});
    // (0, a): real and negative
    rows.push_back({s, {0.0, a, [=](double, cplx v) {
                          return std::abs(v.imag()) + std::max(0.0, v.real());
                        }}});
    // (a, b): purely imaginary with argument -s pi/2
    rows.push_back({s, {a, b, [=](double, cplx v) {
                          return std::abs(v.real()) + std::max(0.0, ds * v.imag());
                        }}});
    // (b, 1): Im = s (1 - 1/c) pi
    rows.push_back({s, {b, 1.0, [=](double, cplx v) {
                          return std::abs(v.imag() - ds * (1.0 - 1.0 / c) * M_PI);
                        }}});
    // (1, inf): Im = s (1 - x/c) pi
    rows.push_back({s, {1.0, 3.0, [=](double x, cplx v) {
                          return std::abs(v.imag() - ds * (1.0 - x / c) * M_PI);
                        }}});
  }
  double worst = run_rows(bundle, f, rows, bug);
  // edge values
  worst = std::max(worst, std::abs(eps_limit(f, a, +1, bug)));
  worst = std::max(worst,
                   std::abs(eps_limit(f, b, +1, bug) - kI * M_PI * (1.0 - 1.0 / c)));
  worst = std::max(worst,
                   std::abs(eps_limit(f, b, -1, bug) + kI * M_PI * (1.0 - 1.0 / c)));
  return worst;
}

double check_rows_phi_right(const MapBundle& bundle, bool bug) {
  const double a = bundle.eq.a, b = bundle.eq.b, c = bundle.eq.c;
  auto f = [&](cplx z) { return phi_right(bundle, z); };
  std::vector<std::pair<int, RowCheck>> rows;
  for (int s : {+1, -1}) {
    double ds = static_cast<double>(s);
    // (-inf, 0): Im = s ((1-c)/c - x/c) pi
    rows.push_back({s, {-2.0, 0.0, [=](double x, cplx v) {
                          return std::abs(v.imag() - ds * ((1.0 - c) / c - x / c) * M_PI);
                        }}});
    // (0, a): Im = s (1/c - 1) pi
    rows.push_back({s, {0.0, a, [=](double, cplx v) {
                          return std::abs(v.imag() - ds * (1.0 / c - 1.0) * M_PI);
                        }}});
    // (a, b): purely imaginary with argument s pi/2
    rows.push_back({s, {a, b, [=](double, cplx v) {
                          return std::abs(v.real()) + std::max(0.0, -ds * v.imag());
                        }}});
    // (b, 1): real and negative
    rows.push_back({s, {b, 1.0, [=](double, cplx v) {
                          return std::abs(v.imag()) + std::max(0.0, v.real());
                        }}});
    // (1, inf): Im = s (1-x) pi / c
    rows.push_back({s, {1.0, 3.0, [=](double x, cplx v) {
                          return std::abs(v.imag() - ds * (1.0 - x) * M_PI / c);
                        }}});
  }
  double worst = run_rows(bundle, f, rows, bug);
  worst = std::max(worst, std::abs(eps_limit(f, b, +1, bug)));
  worst = std::max(worst,
                   std::abs(eps_limit(f, a, +1, bug) - kI * M_PI * (1.0 / c - 1.0)));
  worst = std::max(worst,
                   std::abs(eps_limit(f, a, -1, bug) + kI * M_PI * (1.0 / c - 1.0)));
  return worst;
}

double check_rows_phi(const MapBundle& bundle, bool bug) {
  const double a = bundle.eq.a, b = bundle.eq.b, c = bundle.eq.c;
  auto f = [&](cplx z) { return phi(bundle, z); };
  std::vector<std::pair<int, RowCheck>> rows;
  for (int s : {+1, -1}) {
    double ds = static_cast<double>(s);
    // (-inf, 0): Im = -s pi
    rows.push_back({s, {-2.0, 0.0, [=](double, cplx v) {
                          return std::abs(v.imag() + ds * M_PI);
                        }}});
    // (0, a): Im = -s (1 - x/c) pi
    rows.push_back({s, {0.0, a, [=](double x, cplx v) {
                          return std::abs(v.imag() + ds * (1.0 - x / c) * M_PI);
                        }}});
    // (a, b): purely imaginary with argument -s pi/2
    rows.push_back({s, {a, b, [=](double, cplx v) {
                          return std::abs(v.real()) + std::max(0.0, ds * v.imag());
                        }}});
    // (b, 1): Im = -s (1-x) pi / c
    rows.push_back({s, {b, 1.0, [=](double x, cplx v) {
                          return std::abs(v.imag() + ds * (1.0 - x) * M_PI / c);
                        }}});
  }
  double worst = run_rows(bundle, f, rows, bug);
  worst = std::max(worst,
                   std::abs(eps_limit(f, a, +1, bug) + kI * M_PI * (1.0 - a / c)));
  worst = std::max(worst,
                   std::abs(eps_limit(f, b, +1, bug) + kI * M_PI * (1.0 - b) / c));
  // (1, inf): real, decreasing, below the value at 1+
  cplx p1 = f({1.0 + 1e-9, 0.0});
  double worst_tail = 0.0;
  double prev = p1.real();
  if (!(prev < 0.0)) worst_tail = 1.0;
  for (int i = 1; i <= 10; ++i) {
    cplx v = f({1.0 + 0.3 * i, 0.0});
    worst_tail = std::max(worst_tail, std::abs(v.imag()));
    if (!(v.real() < prev)) worst_tail = std::max(worst_tail, 1.0);
    prev = v.real();
  }
  return std::max(worst, worst_tail);
}

// connection: phase anchored at an edge equals the path integral of nu from
// that edge, which is an independent quadrature route
double check_connection(const MapBundle& bundle, bool left) {
  std::mt19937 rng(left ? 4242 : 2424);
  double worst = 0.0;
  double anchor = left ? bundle.eq.a : bundle.eq.b;
  for (int sign : {+1, -1}) {
    std::uniform_real_distribution<double> ur(left ? -0.4 : 0.2, left ? 0.8 : 1.4),
        ui(0.05, 0.8);
    for (int i = 0; i < 100; ++i) {
      cplx z(ur(rng), sign * ui(rng));
      cplx dz = z - anchor;
      cplx quad = integrate_adaptive(
                      [&](double t) { return nu(bundle, anchor + t * dz); }, 0.0, 1.0, 1e-13) *
                  dz;
      cplx closed = left ? phi_left(bundle, z) : phi_right(bundle, z);
      worst = std::max(worst, std::abs(closed - quad));
    }
  }
  return worst;
}

double check_f_continuity(const MapBundle& bundle, bool left) {
  // the 2/3-power map continues analytically across the band and the adjacent
  // saturated stretch; compare the two epsilon-side values
  double lo = left ? bundle.eq.a * 0.2 : bundle.eq.a + 0.05;
  double hi = left ? bundle.eq.b - 0.05 : 1.0 - bundle.eq.a * 0.2;
  double worst = 0.0;
  const double eps = 1e-9;
  for (int i = 0; i <= 20; ++i) {
    double x = lo + (hi - lo) * i / 20.0;
    PolarPower up = left ? f_left(bundle, {x, eps}) : f_right(bundle, {x, eps});
    PolarPower dn = left ? f_left(bundle, {x, -eps}) : f_right(bundle, {x, -eps});
    worst = std::max(worst, std::abs(up.value() - dn.value()));
  }
  return worst;
}

// ------------------------------------------------------------ parametrix ----

double check_szego_jump(const MapBundle& bundle) {
  double worst = 0.0;
  const double a = bundle.eq.a, b = bundle.eq.b;
  for (int i = 1; i <= 15; ++i) {
    double x = a + (b - a) * i / 16.0;
    cplx mp = szego_M(bundle, {x, 0.0}, Side::Plus);
    cplx mm = szego_M(bundle, {x, 0.0}, Side::Minus);
    cplx prod = mp * mm * std::pow(x, bundle.params.alpha) *
                std::pow(1.0 - x, bundle.params.beta);
    worst = std::max(worst, std::abs(prod - 1.0));
  }
  return worst;
}

double check_outer_det(const MapBundle& bundle) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ur(-0.5, 1.5), ui(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    cplx z(ur(rng), ui(rng));
    if (std::abs(z.imag()) < 1e-3) continue;
    worst = std::max(worst, std::abs(outer_N(bundle, z).det() - 1.0));
  }
  return worst;
}

double check_parametrix_routes(const MapBundle& bundle) {
  std::mt19937 rng(100);
  std::uniform_real_distribution<double> ur(-0.5, 1.5), ui(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    cplx z(ur(rng), ui(rng));
    if (std::abs(z.imag()) < 1e-3) continue;
    OuterParametrix o = outer_N(bundle, z);
    worst = std::max(worst, rel(m_value(bundle, z), o.m));
    worst = std::max(worst, rel(m_star_value(bundle, z), o.m_star));
  }
  return worst;
}

// ------------------------------------------------------------------ airy ----

std::vector<cplx> airy_cloud(int count, double radius) {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> um(0.2, radius), ua(-M_PI, M_PI);
  std::vector<cplx> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(std::polar(um(rng), ua(rng)));
  return pts;
}

double check_airy_wronskian() {
  double worst = 0.0;
  for (cplx z : airy_cloud(200, 30.0)) {
    AiryValues v = airy_all(z);
    cplx t1 = v.ai * v.bi_prime, t2 = v.ai_prime * v.bi;
    // off the axis both products blow up and cancel; residual scales with them
    double scale = std::max({1.0, std::abs(t1), std::abs(t2)});
    worst = std::max(worst, std::abs(t1 - t2 - 1.0 / M_PI) / scale);
  }
  return worst;
}

double check_airy_rotation() {
  double worst = 0.0;
  for (cplx z : airy_cloud(200, 12.0)) {
    AiryValues v0 = airy_all(z);
    AiryValues v1 = airy_all(kOmega * z);
    AiryValues v2 = airy_all(kOmega * kOmega * z);
    cplx s = v0.ai + kOmega * v1.ai + kOmega * kOmega * v2.ai;
    cplx sp = v0.ai_prime + kOmega * kOmega * v1.ai_prime + kOmega * v2.ai_prime;
    double scale = std::max({std::abs(v0.ai), std::abs(v1.ai), std::abs(v2.ai), 1.0});
    double scale_p =
        std::max({std::abs(v0.ai_prime), std::abs(v1.ai_prime), std::abs(v2.ai_prime), 1.0});
    worst = std::max(worst, std::abs(s) / scale);
    worst = std::max(worst, std::abs(sp) / scale_p);
  }
  return worst;
}

double check_airy_cross_product() {
  // om Ai(om^2 z) Ai'(om z) - om^2 Ai(om z) Ai'(om^2 z) = 1/(2 pi i)
  double worst = 0.0;
  for (cplx z : airy_cloud(200, 12.0)) {
    AiryValues v1 = airy_all(kOmega * z);
    AiryValues v2 = airy_all(kOmega * kOmega * z);
    cplx t1 = kOmega * v2.ai * v1.ai_prime;
    cplx t2 = kOmega * kOmega * v1.ai * v2.ai_prime;
    double scale = std::max({1.0, std::abs(t1), std::abs(t2)});
    worst = std::max(worst, std::abs(t1 - t2 - 1.0 / (2.0 * M_PI * kI)) / scale);
  }
  return worst;
}

double check_airy_seam() {
  std::mt19937 rng(2025);
  std::uniform_real_distribution<double> um(8.0, 10.0), ua(-M_PI, M_PI);
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    cplx z = std::polar(um(rng), ua(rng));
    if (std::abs(std::arg(z)) > 2.0 * M_PI / 3.0) continue;  // expansion sector only
    AiryValues s = airy_series_path(z);
    AiryValues a = airy_asymptotic_path(z);
    worst = std::max(worst, rel(a.ai, s.ai));
    worst = std::max(worst, rel(a.ai_prime, s.ai_prime));
  }
  return worst;
}

double check_airy_second_solution() {
  double worst = 0.0;
  for (cplx z : airy_cloud(60, 8.0)) {
    AiryValues v = airy_all(z);
    worst = std::max(worst, rel(bi_from_ai(z, +1), v.bi));
    worst = std::max(worst, rel(bi_from_ai(z, -1), v.bi));
  }
  return worst;
}

// ------------------------------------------------------------ reductions ----

double check_chebyshev_band(const MapBundle& bundle) {
  double worst = 0.0;
  const double a = bundle.eq.a;
  for (int i = 0; i < 10; ++i) {
    double x = bundle.x1 + (bundle.x0 - 0.02 - bundle.x1) * i / 9.0;
    worst = std::max(worst, chebyshev_residual_band(bundle, {x, 0.0}, Side::Plus));
  }
  (void)a;
  return worst;
}

double check_chebyshev_left(const MapBundle& bundle) {
  double worst = 0.0;
  for (int i = 1; i <= 5; ++i)
    worst = std::max(worst, chebyshev_residual_left_negative(bundle, -0.1 * i));
  for (int i = 1; i <= 5; ++i)
    worst = std::max(worst,
                     chebyshev_residual_left_saturated(bundle, bundle.x1 * i / 6.0));
  return worst;
}

}  // namespace

std::vector<InvariantResult> run_verification(const VerifyOptions& opt) {
  Collector c;
  c.opt = &opt;
  const bool bug = opt.inject_bug;

  c.run("oracle.orthogonality", 1e-15,
        [] { return std::max({check_orthogonality(0.0, 0.0, 8, 5),
                              check_orthogonality(0.5, 1.5, 10, 5),
                              check_orthogonality(0.3, 0.7, 16, 5)}); });
  c.run("oracle.recurrence-agreement", 1e-20, check_recurrence_agreement);
  c.run("oracle.reflection-symmetry", 1e-20, check_reflection_symmetry);

  c.run("equilibrium.endpoint-algebra", 1e-14, check_endpoint_algebra);
  c.run("equilibrium.mass", 1e-10, check_density_mass);
  c.run("equilibrium.density-bounds", 1e-14, check_density_bounds);
  c.run("equilibrium.band-log-integral", 1e-9, check_band_log_integral);
  c.run("equilibrium.density-derivative", 1e-3, check_density_derivative);

  c.run("g.quadrature-agreement", 1e-8, check_g_quadrature);
  c.run("g.derivative-agreement", 1e-6, check_g_derivative);
  c.run("g.band-derivative-sum", 1e-10, check_g_band_derivative_sum);
  c.run("g.density-jump", 1e-10, check_g_prime_jump);

  MapBundle bundle = make_bundle({0.3, 0.7, 128, 64});
  c.run("phase.rows.left-edge", 1e-8, [&] { return check_rows_phi_left(bundle, bug); });
  c.run("phase.rows.right-edge", 1e-8, [&] { return check_rows_phi_right(bundle, bug); });
  c.run("phase.rows.plain", 1e-8, [&] { return check_rows_phi(bundle, bug); });
  c.run("phase.connection.left-edge", 1e-10, [&] { return check_connection(bundle, true); });
  c.run("phase.connection.right-edge", 1e-10, [&] { return check_connection(bundle, false); });
  c.run("maps.airy-map-continuity.left", 1e-8, [&] { return check_f_continuity(bundle, true); });
  c.run("maps.airy-map-continuity.right", 1e-8,
        [&] { return check_f_continuity(bundle, false); });

  c.run("parametrix.weight-jump", 1e-12, [&] { return check_szego_jump(bundle); });
  c.run("parametrix.unimodular", 1e-12, [&] { return check_outer_det(bundle); });
  c.run("parametrix.two-routes", 1e-12, [&] { return check_parametrix_routes(bundle); });

  c.run("airy.wronskian", 1e-11, check_airy_wronskian);
  c.run("airy.rotation", 1e-11, check_airy_rotation);
  c.run("airy.cross-product", 1e-11, check_airy_cross_product);
  c.run("airy.seam", 1e-10, check_airy_seam);
  c.run("airy.second-solution", 1e-10, check_airy_second_solution);

  MapBundle cheb = make_bundle({0.0, 0.0, 128, 64});
  c.run("reduction.band", 1e-10, [&] { return check_chebyshev_band(cheb); });
  c.run("reduction.left", 1e-10, [&] { return check_chebyshev_left(cheb); });

  return c.results;
}

}  // namespace hahn
