#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hahn/airy.hpp"

using cplx = std::complex<double>;

namespace {
const cplx kOmega = std::exp(cplx(0.0, 2.0 * M_PI / 3.0));
}

TEST_CASE("values at the origin") {
  auto v = hahn::airy_all({0.0, 0.0});
  double g23 = std::tgamma(2.0 / 3.0), g13 = std::tgamma(1.0 / 3.0);
  CHECK(v.ai.real() == doctest::Approx(std::pow(3.0, -2.0 / 3.0) / g23).epsilon(1e-14));
  CHECK(v.ai_prime.real() == doctest::Approx(-std::pow(3.0, -1.0 / 3.0) / g13).epsilon(1e-14));
  CHECK(v.bi.real() == doctest::Approx(std::pow(3.0, -1.0 / 6.0) / g23).epsilon(1e-14));
  CHECK(v.bi_prime.real() == doctest::Approx(std::pow(3.0, 1.0 / 6.0) / g13).epsilon(1e-14));
  CHECK(v.ai.imag() == 0.0);
}

TEST_CASE("reference values on the real axis") {
  // frozen from a 50-digit series evaluation
  CHECK(hahn::airy_all({1.0, 0.0}).ai.real() ==
        doctest::Approx(0.13529241631288141552414742351546630617494414298833).epsilon(1e-13));
  CHECK(hahn::airy_all({1.0, 0.0}).bi.real() ==
        doctest::Approx(1.2074235949528712594363788170282869953853489446444).epsilon(1e-13));
  CHECK(hahn::airy_all({-1.0, 0.0}).ai.real() ==
        doctest::Approx(0.53556088329235211879951656563887470746693089768362).epsilon(1e-13));
  CHECK(hahn::airy_all({-5.0, 0.0}).bi.imag() == doctest::Approx(0.0));
}

TEST_CASE("wronskian") {
  for (cplx z : {cplx(1.0, 1.0), cplx(-3.0, 2.0), cplx(7.0, -5.0), cplx(20.0, 10.0)}) {
    auto v = hahn::airy_all(z);
    CHECK(std::abs(v.ai * v.bi_prime - v.ai_prime * v.bi - 1.0 / M_PI) < 1e-11);
  }
}

TEST_CASE("rotation identity") {
  for (cplx z : {cplx(2.0, -3.0), cplx(0.5, 0.5), cplx(-4.0, 1.0)}) {
    auto v0 = hahn::airy_all(z);
    auto v1 = hahn::airy_all(kOmega * z);
    auto v2 = hahn::airy_all(kOmega * kOmega * z);
    CHECK(std::abs(v0.ai + kOmega * v1.ai + kOmega * kOmega * v2.ai) < 1e-12);
    CHECK(std::abs(v0.ai_prime + kOmega * kOmega * v1.ai_prime + kOmega * v2.ai_prime) < 1e-12);
  }
}

TEST_CASE("cross product identity") {
  for (cplx z : {cplx(1.0, 2.0), cplx(-2.5, -0.5), cplx(6.0, 1.0)}) {
    auto v1 = hahn::airy_all(kOmega * z);
    auto v2 = hahn::airy_all(kOmega * kOmega * z);
    cplx t1 = kOmega * v2.ai * v1.ai_prime;
    cplx t2 = kOmega * kOmega * v1.ai * v2.ai_prime;
    // the two products cancel from e^{|zeta|} scale; measure against them
    double scale = std::max({1.0, std::abs(t1), std::abs(t2)});
    CHECK(std::abs(t1 - t2 - 1.0 / (2.0 * M_PI * cplx(0.0, 1.0))) < 1e-11 * scale);
  }
}

TEST_CASE("second solution from rotations") {
  for (cplx z : {cplx(-2.0, 1.0), cplx(0.3, -0.8), cplx(4.0, 0.0)}) {
    auto v = hahn::airy_all(z);
    CHECK(std::abs(hahn::bi_from_ai(z, +1) - v.bi) < 1e-12 * std::abs(v.bi));
    CHECK(std::abs(hahn::bi_from_ai(z, -1) - v.bi) < 1e-12 * std::abs(v.bi));
  }
}

TEST_CASE("series and expansion paths agree at the seam") {
  for (double r : {8.0, 9.0, 10.0}) {
    for (double th : {-0.5, 0.0, 0.9, 2.0}) {
      cplx z = std::polar(r, th);
      auto s = hahn::airy_series_path(z);
      auto a = hahn::airy_asymptotic_path(z);
      CHECK(std::abs(s.ai - a.ai) < 1e-10 * std::abs(s.ai));
      CHECK(std::abs(s.ai_prime - a.ai_prime) < 1e-10 * std::abs(s.ai_prime));
    }
  }
}

TEST_CASE("differential equation residual") {
  const double h = 1e-4;
  for (cplx z : {cplx(1.3, 0.7), cplx(-2.0, -1.0)}) {
    auto f = [](cplx w) { return hahn::airy_all(w).ai; };
    cplx dd = (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
    CHECK(std::abs(dd - z * f(z)) < 1e-6);
  }
}

TEST_CASE("scaled variant") {
  auto s0 = hahn::airy_scaled({0.0, 0.0});
  CHECK(s0.exponent == 0.0);
  cplx z(3.0, 0.0);
  auto sc = hahn::airy_scaled(z);
  auto pl = hahn::airy_all(z);
  CHECK(std::abs(sc.values.ai * std::exp(-sc.exponent) - pl.ai) < 1e-12 * std::abs(pl.ai));
  CHECK(std::abs(sc.values.bi * std::exp(sc.exponent) - pl.bi) < 1e-12 * std::abs(pl.bi));
  // leading asymptotic shape at z = 25
  double z25 = 25.0;
  auto s25 = hahn::airy_scaled({z25, 0.0});
  double lead = std::pow(z25, -0.25) / (2.0 * std::sqrt(M_PI));
  CHECK(std::abs(s25.values.ai.real() - lead) < 2e-3 * lead);
  // no overflow where the plain values would blow up
  auto big = hahn::airy_scaled({400.0, 0.0});
  CHECK(std::isfinite(std::abs(big.values.bi)));
  CHECK(big.exponent > 5000.0);
}
