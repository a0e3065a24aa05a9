#include "hahn/parametrix.hpp"

#include <cmath>

namespace hahn {

namespace {
using cplx = std::complex<double>;

cplx cpow(cplx base, double expo) { return std::exp(expo * std::log(base)); }
}  // namespace

double m_infinity(const MapBundle& b) {
  double s = std::sqrt(b.eq.a) + std::sqrt(b.eq.b);
  return std::pow(2.0 / s, b.params.alpha + b.params.beta);
}

cplx szego_M(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  double c = b.eq.c;
  double s = std::sqrt(b.eq.a) + std::sqrt(b.eq.b);
  cplx r = band_root(b, zz);
  cplx f1 = (zz + c / 2.0 + r) / (zz * s);
  cplx f2 = (1.0 - zz + c / 2.0 - r) / ((1.0 - zz) * s);
  return cpow(f1, b.params.alpha) * cpow(f2, b.params.beta);
}

cplx ratio_a(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  // log(z-b) - log(z-a) is single-valued off [a,b]; a quarter of it
  // exponentiates to the branch that is continuous there and -> 1 at infinity
  return std::exp(0.25 * (std::log(zz - b.eq.b) - std::log(zz - b.eq.a)));
}

OuterParametrix outer_N(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  const cplx i(0.0, 1.0);
  double minf = m_infinity(b);
  cplx M = szego_M(b, zz);
  cplx av = ratio_a(b, zz);
  cplx ap = av + 1.0 / av, am = av - 1.0 / av;
  OuterParametrix o;
  // N = (1/2) Minf^{-s3} [[ap, i am], [-i am, ap]] M^{s3}
  o.n11 = 0.5 * (1.0 / minf) * ap * M;
  o.n12 = 0.5 * (1.0 / minf) * i * am / M;
  o.n21 = 0.5 * minf * (-i) * am * M;
  o.n22 = 0.5 * minf * ap / M;
  o.m = o.n11;
  // m* = -i N12 / h(z) with h continued off the interval
  cplx h = cpow(zz, b.params.alpha) * cpow(1.0 - zz, b.params.beta);
  o.m_star = -i * o.n12 / h;
  return o;
}

cplx m_value(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  double c = b.eq.c;
  cplx sa = std::sqrt(zz - b.eq.a), sb = std::sqrt(zz - b.eq.b);
  cplx r = sa * sb;
  cplx qa = cpow(zz - b.eq.a, 0.25), qb = cpow(zz - b.eq.b, 0.25);
  return (sa + sb) / (2.0 * qa * qb) * cpow((zz + c / 2.0 + r) / (2.0 * zz), b.params.alpha) *
         cpow((1.0 - zz + c / 2.0 - r) / (2.0 * (1.0 - zz)), b.params.beta);
}

cplx m_star_value(const MapBundle& b, cplx z, Side side) {
  cplx zz = with_side(z, side);
  double c = b.eq.c;
  cplx sa = std::sqrt(zz - b.eq.a), sb = std::sqrt(zz - b.eq.b);
  cplx r = sa * sb;
  cplx qa = cpow(zz - b.eq.a, 0.25), qb = cpow(zz - b.eq.b, 0.25);
  return (sb - sa) / (2.0 * qa * qb) * cpow((zz + c / 2.0 - r) / (2.0 * zz), b.params.alpha) *
         cpow((1.0 - zz + c / 2.0 + r) / (2.0 * (1.0 - zz)), b.params.beta);
}

double h_weight(const MapBundle& b, double x) {
  return std::pow(x, b.params.alpha) * std::pow(1.0 - x, b.params.beta);
}

}  // namespace hahn
