#include "hahn/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

namespace hahn {

namespace {
using cplx = std::complex<double>;
}

std::pair<double, double> mrs_endpoints(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("degree ratio must be in (0,1)");
  double s = std::sqrt(1.0 - c * c);
  return {0.5 * (1.0 - s), 0.5 * (1.0 + s)};
}

double density_mu(double c, double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("density evaluated outside [0,1]");
  auto [a, b] = mrs_endpoints(c);
  if (x <= a || x >= b) return 1.0 / c;
  double arg = c / (2.0 * std::sqrt(x - x * x));
  if (arg > 1.0) arg = 1.0;  // rounding at the band edges
  return (2.0 / (M_PI * c)) * std::asin(arg);
}

double density_mu_prime(double c, double x) {
  auto [a, b] = mrs_endpoints(c);
  if (!(x > a && x < b)) throw std::domain_error("density derivative defined inside the band");
  return -(1.0 - 2.0 * x) / (2.0 * M_PI * (x - x * x) * std::sqrt((x - a) * (b - x)));
}

double external_field_V(double x) {
  if (x <= 0.0 || x >= 1.0) return 1.0;  // limiting value at the endpoints
  return 1.0 - x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

std::complex<double> g_explicit(double c, std::complex<double> z, Side side) {
  auto [a, b] = mrs_endpoints(c);
  cplx zz = with_side(z, side);
  cplx sa = std::sqrt(zz - a), sb = std::sqrt(zz - b);
  cplx r = sa * sb;
  return -1.0 - 2.0 * std::log(2.0) + (zz - 1.0) * std::log(zz - 1.0) / c -
         zz * std::log(zz) / c + (2.0 - 2.0 / c) * std::log(sa + sb) +
         (2.0 / c) * zz * std::log(zz + r + c / 2.0) +
         (2.0 / c) * (1.0 - zz) * std::log(zz - 1.0 + r - c / 2.0);
}

std::complex<double> g_prime_explicit(double c, std::complex<double> z, Side side) {
  auto [a, b] = mrs_endpoints(c);
  cplx zz = with_side(z, side);
  cplx r = std::sqrt(zz - a) * std::sqrt(zz - b);
  return (2.0 / c) * (std::log(zz + r + c / 2.0) - std::log(zz - 1.0 + r - c / 2.0)) +
         (1.0 / c) * (std::log(zz - 1.0) - std::log(zz));
}

double lagrange_l(double c) {
  auto [a, b] = mrs_endpoints(c);
  (void)b;
  cplx gp = g_explicit(c, {a, 0.0}, Side::Plus);
  cplx l = 2.0 * gp - cplx(0.0, 2.0 * M_PI) * (1.0 - a / c);
  if (std::abs(l.imag()) > 1e-10)
    throw std::runtime_error("Lagrange constant has nonzero imaginary residue");
  return l.real();
}

double log_integral_band(double c) {
  auto [a, b] = mrs_endpoints(c);
  return 2.0 * M_PI * std::log(0.5 * (std::sqrt(a) + std::sqrt(b)));
}

EquilibriumData make_equilibrium(double c) {
  auto [a, b] = mrs_endpoints(c);
  return {a, b, c, lagrange_l(c)};
}

}  // namespace hahn
