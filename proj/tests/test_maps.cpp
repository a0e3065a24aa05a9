#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hahn/maps.hpp"
#include "hahn/quadrature.hpp"

using hahn::MapBundle;
using hahn::Side;
using cplx = std::complex<double>;

namespace {
const cplx kI(0.0, 1.0);

MapBundle bundle() { return hahn::make_bundle({0.3, 0.7, 128, 64}); }
}  // namespace

TEST_CASE("bundle geometry") {
  MapBundle b = bundle();
  CHECK(b.x0 == 0.5);
  CHECK(b.x1 == doctest::Approx(b.eq.a / 2.0));
  CHECK(b.delta == doctest::Approx(std::min(b.eq.a, 1.0 - b.eq.b) / 2.0));
  CHECK(b.x1 > 0.0);
  CHECK(b.x1 < b.eq.a);
  CHECK(b.x0 > b.eq.a);
  CHECK(b.x0 < b.eq.b);
}

TEST_CASE("band root branch") {
  MapBundle b = bundle();
  // ~ z at infinity
  cplx z(1e6, 2e5);
  CHECK(std::abs(hahn::band_root(b, z) / z - 1.0) < 1e-5);
  // continuous across (-inf, a) and (b, inf); jump only on [a, b]
  for (double x : {-0.5, 0.02, 0.96, 1.7}) {
    CHECK(std::abs(hahn::band_root(b, {x, 1e-10}) - hahn::band_root(b, {x, -1e-10})) < 1e-8);
  }
  double mid = 0.5;
  CHECK(std::abs(hahn::band_root(b, {mid, 0.0}, Side::Plus) +
                 hahn::band_root(b, {mid, 0.0}, Side::Minus)) < 1e-14);
}

TEST_CASE("nu boundary values on the band") {
  MapBundle b = bundle();
  const double c = b.eq.c;
  double x = 0.5;
  cplx want = -(2.0 * kI / c) * std::acos(c / (2.0 * std::sqrt(x - x * x)));
  CHECK(std::abs(hahn::nu(b, {x, 0.0}, Side::Plus) - want) < 1e-12);
  CHECK(std::abs(hahn::nu(b, {x, 0.0}, Side::Minus) + want) < 1e-12);
}

TEST_CASE("left-edge phase vanishes at a and is negative on the saturated stretch") {
  MapBundle b = bundle();
  CHECK(std::abs(hahn::phi_left(b, {b.eq.a, 0.0}, Side::Plus)) < 1e-9);
  for (double x : {0.01, 0.03, 0.05}) {
    cplx v = hahn::phi_left(b, {x, 0.0}, Side::Plus);
    CHECK(std::abs(v.imag()) < 1e-10);
    CHECK(v.real() < 0.0);
    // definition route: integral of nu from a
    cplx quad = hahn::integrate_adaptive(
                    [&](double t) {
                      return hahn::nu(b, {b.eq.a + t * (x - b.eq.a), 1e-12});
                    },
                    0.0, 1.0, 1e-12) *
                (x - b.eq.a);
    CHECK(std::abs(v - quad) < 1e-8);
  }
  cplx at_b = hahn::phi_left(b, {b.eq.b, 0.0}, Side::Plus);
  CHECK(std::abs(at_b - kI * M_PI * (1.0 - 1.0 / b.eq.c)) < 1e-9);
}

TEST_CASE("right-edge phase vanishes at b") {
  MapBundle b = bundle();
  CHECK(std::abs(hahn::phi_right(b, {b.eq.b, 0.0}, Side::Plus)) < 1e-9);
  cplx at_a = hahn::phi_right(b, {b.eq.a, 0.0}, Side::Plus);
  CHECK(std::abs(at_a - kI * M_PI * (1.0 / b.eq.c - 1.0)) < 1e-9);
  // relation between the two edge phases in the upper half-plane
  cplx z(0.4, 0.3);
  CHECK(std::abs(hahn::phi_right(b, z) - hahn::phi_left(b, z) -
                 kI * M_PI * (1.0 / b.eq.c - 1.0)) < 1e-12);
}

TEST_CASE("airy maps vanish at their edges and continue across the band") {
  MapBundle b = bundle();
  CHECK(hahn::f_left(b, {b.eq.a, 0.0}, Side::Plus).modulus < 1e-7);
  CHECK(hahn::f_right(b, {b.eq.b, 0.0}, Side::Plus).modulus < 1e-7);
  for (double x : {0.05, 0.2, 0.5, 0.8}) {
    cplx up = hahn::f_left(b, {x, 1e-9}).value();
    cplx dn = hahn::f_left(b, {x, -1e-9}).value();
    CHECK(std::abs(up - dn) < 1e-7);
  }
  // simple zero at a: f ~ slope * (a - z), positive on the exponential side
  double c = b.eq.c;
  double slope = std::pow(4.0 / (c * c) * std::sqrt(b.eq.b - b.eq.a), 2.0 / 3.0);
  for (double off : {1e-4, -1e-4}) {
    cplx f = hahn::f_left(b, {b.eq.a + off, 0.0}, Side::Plus).value();
    CHECK(std::abs(f + slope * off) < 5e-3 * std::abs(slope * off) + 1e-12);
  }
}

TEST_CASE("quarter-power jump of the left map across the band") {
  MapBundle b = bundle();
  double x = 0.5 * (b.eq.a + b.eq.b);
  auto up = hahn::f_left(b, {x, 0.0}, Side::Plus).pow(0.25);
  auto dn = hahn::f_left(b, {x, 0.0}, Side::Minus).pow(0.25);
  cplx ratio = up.value() / dn.value();
  CHECK(std::abs(ratio - std::exp(-kI * M_PI / 2.0)) < 1e-10);
  auto ups = hahn::f_right(b, {x, 0.0}, Side::Plus).pow(0.25);
  auto dns = hahn::f_right(b, {x, 0.0}, Side::Minus).pow(0.25);
  CHECK(std::abs(ups.value() / dns.value() - std::exp(kI * M_PI / 2.0)) < 1e-10);
}

TEST_CASE("airy argument scale and branch consistency") {
  MapBundle b = bundle();
  cplx z(0.3, 0.1);
  auto x1 = hahn::xi_left(b, z, 32);
  auto x2 = hahn::xi_left(b, z, 64);
  CHECK(x2.modulus / x1.modulus == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-12));
  CHECK(x1.argument == doctest::Approx(x2.argument));
  // (2/3) xi^{3/2} = -n phi_left in the upper half-plane
  long n = 64;
  auto xp = hahn::xi_left(b, z, n).pow(1.5);
  cplx lhs = (2.0 / 3.0) * xp.value();
  cplx rhs = -static_cast<double>(n) * hahn::phi_left(b, z);
  CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
  // upper half of region II maps into -pi < arg < 0
  CHECK(hahn::f_left(b, cplx(0.3, 0.02)).argument < 0.0);
  CHECK(hahn::f_left(b, cplx(0.3, 0.02)).argument > -M_PI);
}

TEST_CASE("node product factor") {
  MapBundle b = hahn::make_bundle({0.0, 0.0, 64, 32});
  CHECK(std::abs(hahn::factor_E(b, {1e4, 0.0}, Side::Plus).value() - 1.0) < 1e-6);
  // continuation across (0,1): boundary limits of the continued factor agree
  for (double x : {0.23, 0.61}) {
    cplx up = hahn::factor_E_cont(b, {x, 1e-6}).value();
    cplx dn = hahn::factor_E_cont(b, {x, -1e-6}).value();
    CHECK(std::abs(up - dn) < 1e-6 * std::abs(up));
  }
}

TEST_CASE("stirling-ratio factors") {
  MapBundle b = hahn::make_bundle({0.3, 0.7, 512, 256});
  CHECK(std::abs(hahn::factor_D(b, {0.3, 0.0}).value() - 1.0) < 1e-2);
  // identity with the continued node factor on the upper side
  for (cplx z : {cplx(0.3, 0.05), cplx(0.7, 0.02)}) {
    hahn::LogComplex lhs = hahn::factor_D_star(b, z) * hahn::factor_E_cont(b, z);
    hahn::LogComplex rhs = hahn::factor_D(b, z) * hahn::factor_E(b, z);
    CHECK(hahn::relative_error(lhs, rhs) < 1e-10);
  }
  // D*(z) = (1 + e^{2 N pi i z}) D(z) in the upper half-plane
  for (cplx z : {cplx(0.4, 0.03), cplx(0.2, 0.08)}) {
    cplx twist = 1.0 + std::exp(2.0 * M_PI * kI * static_cast<double>(b.params.bigN) * z);
    hahn::LogComplex lhs = hahn::factor_D_star(b, z);
    hahn::LogComplex rhs = hahn::factor_D(b, z) * twist;
    CHECK(hahn::relative_error(lhs, rhs) < 1e-10);
  }
  // the switch picks the reflected factor right of x0
  cplx z(0.8, 0.01);
  CHECK(hahn::relative_error(hahn::factor_D_switch(b, z), hahn::factor_D_star(b, 1.0 - z)) ==
        0.0);
}

TEST_CASE("scaled trig factors") {
  for (cplx z : {cplx(0.3, 0.0), cplx(0.21, 0.4), cplx(-0.1, -0.2)}) {
    long N = 20;
    cplx w = M_PI * static_cast<double>(N) * z;
    CHECK(std::abs(hahn::sin_scaled(N, z).value() - std::sin(w)) < 1e-12 * std::abs(std::sin(w)) + 1e-14);
    CHECK(std::abs(hahn::cos_scaled(N, z).value() - std::cos(w)) < 1e-12 * std::abs(std::cos(w)) + 1e-14);
  }
  // no overflow at large imaginary part
  hahn::LogComplex big = hahn::sin_scaled(512, {0.3, 2.0});
  CHECK(std::isfinite(big.logmag));
  CHECK(big.logmag > 3000.0);
}
