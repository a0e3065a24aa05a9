#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hahn/asymptotics.hpp"
#include "hahn/oracle.hpp"

using hahn::HahnParams;
using hahn::MapBundle;
using hahn::Region;
using hahn::Side;
using cplx = std::complex<double>;

namespace {

MapBundle bundle(long n) {
  return hahn::make_bundle({0.3, 0.7, 2 * n, n});
}

double error_vs_oracle(const MapBundle& b, cplx z) {
  hahn::LogComplex exact =
      hahn::eval_monic_exact(b.params, z, hahn::default_precision(b.params.n));
  return hahn::relative_error(hahn::asym_auto(b, z).value, exact);
}

}  // namespace

TEST_CASE("region classification") {
  MapBundle b = bundle(64);
  CHECK(hahn::classify(b, {2.0, 0.0}).region == Region::I);
  CHECK(hahn::classify(b, {0.2, 0.0}).region == Region::II);
  CHECK(hahn::classify(b, {0.8, 0.0}).region == Region::III);
  CHECK(hahn::classify(b, {0.5, 0.5}).region == Region::I);
  // tie-breaks: the split line goes left, the K boundary goes outside
  CHECK(hahn::classify(b, {b.x0, 0.0}).region == Region::II);
  CHECK(hahn::classify(b, {b.x1, 0.0}).region == Region::I);
  CHECK(hahn::classify(b, {0.5, b.delta}).region == Region::I);
  CHECK(hahn::classify(b, {0.3, b.lens_height / 2.0}).in_lens);
  CHECK_FALSE(hahn::classify(b, {0.3, 2.0 * b.delta}).in_lens);
}

TEST_CASE("elementary region far from the interval") {
  MapBundle b = bundle(32);
  CHECK(error_vs_oracle(b, {1000.0, 0.0}) < 1e-1);
  CHECK(error_vs_oracle(b, {0.5, 0.5}) < 1e-1);
  CHECK(error_vs_oracle(b, {-0.5, 0.0}) < 1e-1);
}

TEST_CASE("error halves from n=64 to n=128 in the elementary region") {
  double e64 = error_vs_oracle(bundle(64), {0.5, 0.5});
  double e128 = error_vs_oracle(bundle(128), {0.5, 0.5});
  CHECK(e128 / e64 > 0.3);
  CHECK(e128 / e64 < 0.7);
}

TEST_CASE("oscillatory regions at moderate degree") {
  MapBundle b = bundle(64);
  CHECK(error_vs_oracle(b, {0.2, 0.0}) < 0.15);
  CHECK(error_vs_oracle(b, {0.8, 0.0}) < 0.15);
  // finite right at the band-edge neighborhood
  CHECK(error_vs_oracle(b, {b.eq.a + 0.01, 0.0}) < 0.2);
}

TEST_CASE("side independence on the band") {
  MapBundle b = bundle(24);
  cplx p = hahn::asym_region_II(b, {0.3, 0.0}, Side::Plus).value.value();
  cplx m = hahn::asym_region_II(b, {0.3, 0.0}, Side::Minus).value.value();
  CHECK(std::abs(p - m) < 1e-9 * std::abs(p));
  cplx p3 = hahn::asym_region_III(b, {0.6, 0.0}, Side::Plus).value.value();
  cplx m3 = hahn::asym_region_III(b, {0.6, 0.0}, Side::Minus).value.value();
  CHECK(std::abs(p3 - m3) < 1e-9 * std::abs(p3));
}

TEST_CASE("conjugate symmetry and realness") {
  MapBundle b = bundle(32);
  for (cplx z : {cplx(0.3, 0.01), cplx(0.7, 0.02), cplx(0.45, 0.4)}) {
    cplx up = hahn::asym_auto(b, z).value.value();
    cplx dn = hahn::asym_auto(b, std::conj(z)).value.value();
    CHECK(std::abs(dn - std::conj(up)) < 1e-9 * std::abs(up));
  }
  cplx band = hahn::asym_region_II(b, {0.31, 0.0}, Side::Plus).value.value();
  CHECK(std::abs(band.imag()) < 1e-9 * std::abs(band));
}

TEST_CASE("lens correction bound metadata") {
  MapBundle b = bundle(64);
  cplx z(0.3, b.lens_height / 2.0);
  auto r = hahn::asym_region_I(b, z);
  CHECK(std::isfinite(r.correction_bound_log));
  // the bound lives inside the braces; against the assembled value (which
  // carries the common e^{nl/2}) the gap widens linearly in n and is positive
  // once e^{2 pi mu n Im z} overtakes N^{max(alpha,beta)}
  double gap64 = r.value.logmag - (64.0 * b.eq.l / 2.0 + r.correction_bound_log);
  auto r2 = hahn::asym_region_I(bundle(128), z);
  double gap128 = r2.value.logmag - (128.0 * b.eq.l / 2.0 + r2.correction_bound_log);
  auto r4 = hahn::asym_region_I(bundle(256), z);
  double gap256 = r4.value.logmag - (256.0 * b.eq.l / 2.0 + r4.correction_bound_log);
  CHECK(gap128 > gap64);
  CHECK(gap256 > gap128);
  CHECK(gap256 > 0.0);
  auto out = hahn::asym_region_I(b, {2.0, 0.0});
  CHECK(out.correction_bound_log < -1e299);
}

TEST_CASE("normalization conversions round-trip and match the oracle") {
  HahnParams p{0.5, 1.5, 16, 4};
  auto ctx = hahn::default_precision(4);
  hahn::LogComplex monic = hahn::eval_monic_exact(p, cplx(0.37, 0.11), ctx);
  hahn::LogComplex q = hahn::monic_to_Q(p, monic);
  CHECK(hahn::relative_error(hahn::Q_to_monic(p, q), monic) < 1e-13);
  // direct Q evaluation at the shifted argument on N-1 nodes
  HahnParams shifted = p;
  shifted.bigN = 15;
  hahn::BigComplex x =
      hahn::BigComplex(16.0 * 0.37 - 0.5, 16.0 * 0.11, ctx.bits);
  hahn::LogComplex direct =
      hahn::LogComplex::from_big(hahn::eval_Q_exact(shifted, x, ctx));
  CHECK(hahn::relative_error(q, direct) < 1e-12);
}

TEST_CASE("fixed-argument limit formulas") {
  HahnParams p{0.3, 0.7, 128, 64};
  CHECK(hahn::asym_fixed_x(p, 4.0).is_zero());
  CHECK_THROWS_AS((void)hahn::asym_fixed_x(p, -0.5), std::domain_error);
  // positive branch has the sign of -sin(pi x)
  auto v = hahn::asym_fixed_x(p, 3.3);
  CHECK(v.unit.real() > 0.0);  // sin(3.3 pi) < 0
  auto w = hahn::asym_fixed_x(p, 0.3);
  CHECK(w.unit.real() < 0.0);
  // negative branch is positive
  CHECK(hahn::asym_fixed_x(p, -1.7).unit.real() > 0.0);
}

TEST_CASE("zero-exponent reduction identities") {
  MapBundle b = hahn::make_bundle({0.0, 0.0, 64, 32});
  CHECK(hahn::chebyshev_residual_band(b, {0.2, 0.0}, Side::Plus) < 1e-10);
  CHECK(hahn::chebyshev_residual_band(b, {0.3, 0.01}, Side::Auto) < 1e-10);
  CHECK(hahn::chebyshev_residual_left_negative(b, -0.4) < 1e-10);
  CHECK(hahn::chebyshev_residual_left_saturated(b, b.x1 / 2.0) < 1e-10);
  MapBundle bad = hahn::make_bundle({0.3, 0.7, 64, 32});
  CHECK_THROWS_AS((void)hahn::chebyshev_residual_band(bad, {0.2, 0.0}, Side::Plus),
                  std::domain_error);
}

TEST_CASE("overlap between the two oscillatory assemblies") {
  MapBundle b = bundle(128);
  for (double off : {-1e-3, 1e-3}) {
    cplx z(b.x0 + off, 0.0);
    cplx v2 = hahn::asym_region_II(b, z, Side::Plus).value.value();
    cplx v3 = hahn::asym_region_III(b, z, Side::Plus).value.value();
    CHECK(std::abs(v2 - v3) < 1e-2 * std::abs(v2));
  }
}
