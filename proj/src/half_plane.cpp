#include "anosov/half_plane.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anosov {

MoebiusMatrix::MoebiusMatrix(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!(std::abs(det() - 1.0) <= 1e-12)) throw std::invalid_argument("Moebius matrix must have unit determinant");
}

MoebiusMatrix MoebiusMatrix::operator*(const MoebiusMatrix& r) const {
  double a = a_ * r.a_ + b_ * r.c_;
  double b = a_ * r.b_ + b_ * r.d_;
  double c = c_ * r.a_ + d_ * r.c_;
  double d = c_ * r.b_ + d_ * r.d_;
  const double det = a * d - b * c;
  if (det != 1.0) {
    if (!(det > 0.0)) throw std::domain_error("Moebius product lost its determinant");
    const double scale = 1.0 / std::sqrt(det);
    a *= scale;
    b *= scale;
    c *= scale;
    d *= scale;
  }
  return {Unchecked{}, a, b, c, d};
}

std::array<double, 4> MoebiusMatrix::minus(const MoebiusMatrix& r) const {
  return {a_ - r.a_, b_ - r.b_, c_ - r.c_, d_ - r.d_};
}

double frobenius_norm(const std::array<double, 4>& m) {
  return std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3]);
}

HalfPlanePoint make_half_plane_point(double x, double y) {
  if (!std::isfinite(x) || !(y > 0.0) || !std::isfinite(y)) {
    throw std::invalid_argument("half-plane point needs finite x and y > 0");
  }
  return {x, y};
}

HalfPlanePoint moebius_apply(const MoebiusMatrix& g, const HalfPlanePoint& z) {
  if (!(z.y > 0.0)) throw std::invalid_argument("half-plane point needs y > 0");
  // w = cz + d
  const double wr = g.c() * z.x + g.d();
  const double wi = g.c() * z.y;
  const double w2 = wr * wr + wi * wi;
  if (!(std::sqrt(w2) >= 1e-300)) throw std::domain_error("|cz + d| vanishes");
  // u = az + b; u * conj(w) / |w|^2
  const double ur = g.a() * z.x + g.b();
  const double ui = g.a() * z.y;
  return {(ur * wr + ui * wi) / w2, z.y / w2};
}

MoebiusMatrix geodesic_matrix(double t) { return {std::exp(-0.5 * t), 0.0, 0.0, std::exp(0.5 * t)}; }

MoebiusMatrix geodesic_flow(const MoebiusMatrix& m, double t) { return m * geodesic_matrix(t); }

MoebiusMatrix horocycle_matrix(int j, double s) {
  if (j == 1) return {1.0, s, 0.0, 1.0};
  if (j == 2) return {1.0, 0.0, s, 1.0};
  throw std::invalid_argument("horocycle index must be 1 or 2");
}

double horocycle_exponent(int j) {
  if (j == 1) return 1.0;
  if (j == 2) return -1.0;
  throw std::invalid_argument("horocycle index must be 1 or 2");
}

double conjugation_defect_geodesic(int j, double t, double s, double lambda) {
  const MoebiusMatrix lhs = geodesic_matrix(-t) * horocycle_matrix(j, s) * geodesic_matrix(t);
  const MoebiusMatrix rhs = horocycle_matrix(j, s * std::exp(lambda * t));
  return frobenius_norm(lhs.minus(rhs));
}

double conjugation_defect_geodesic(int j, double t, double s) {
  return conjugation_defect_geodesic(j, t, s, horocycle_exponent(j));
}

double horocycle_differential_check(int j, double t, const MoebiusMatrix& m, double h, double lambda) {
  if (!(h >= 1e-8 && h <= 1e-3)) throw std::invalid_argument("finite-difference step must lie in [1e-8, 1e-3]");
  const MoebiusMatrix back = m * geodesic_matrix(-t);
  const MoebiusMatrix fwd = geodesic_matrix(t);
  const auto conj_plus = back * horocycle_matrix(j, h) * fwd;
  const auto conj_minus = back * horocycle_matrix(j, -h) * fwd;
  const auto lhs = conj_plus.minus(conj_minus);
  const auto rhs = (m * horocycle_matrix(j, h)).minus(m * horocycle_matrix(j, -h));
  const double rate = std::exp(lambda * t);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(lhs[i] - rate * rhs[i]) / (2.0 * h));
  }
  return worst;
}

double horocycle_differential_check(int j, double t, const MoebiusMatrix& m, double h) {
  return horocycle_differential_check(j, t, m, h, horocycle_exponent(j));
}

double hyperbolic_distance(const HalfPlanePoint& z1, const HalfPlanePoint& z2) {
  if (!(z1.y > 0.0) || !(z2.y > 0.0)) throw std::invalid_argument("half-plane point needs y > 0");
  const double chord = std::hypot(z1.x - z2.x, z1.y - z2.y);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z1.y * z2.y)));
}

double measure_invariance_check(const MoebiusMatrix& g, const HalfPlanePoint& z, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const auto xp = moebius_apply(g, {z.x + h, z.y});
  const auto xm = moebius_apply(g, {z.x - h, z.y});
  const auto yp = moebius_apply(g, {z.x, z.y + h});
  const auto ym = moebius_apply(g, {z.x, z.y - h});
  const double dudx = (xp.x - xm.x) / (2.0 * h);
  const double dvdx = (xp.y - xm.y) / (2.0 * h);
  const double dudy = (yp.x - ym.x) / (2.0 * h);
  const double dvdy = (yp.y - ym.y) / (2.0 * h);
  const double jac = std::abs(dudx * dvdy - dudy * dvdx);
  const double image_y = moebius_apply(g, z).y;
  const double density = 1.0 / (z.y * z.y);
  return std::abs(jac / (image_y * image_y) - density) / density;
}

}  // namespace anosov
