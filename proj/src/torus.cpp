#include "anosov/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace anosov {
namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer matrix power overflows int64");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer matrix power overflows int64");
  return r;
}

// Fractional part of n * x. The rounding error of the double product is
// recovered with an FMA, so large entries of phi^t do not cost precision.
double frac_of_product(std::int64_t n, double x) {
  constexpr std::int64_t exact_limit = std::int64_t{1} << 53;
  if (n > exact_limit || n < -exact_limit) throw std::overflow_error("matrix entry exceeds 2^53");
  const double nd = static_cast<double>(n);
  const double p = nd * x;
  const double err = std::fma(nd, x, -p);
  return (p - std::floor(p)) + err;
}

}  // namespace

IntegerSymplecticMap::IntegerSymplecticMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (checked_mul(a, d) - checked_mul(b, c) != 1) {
    throw std::invalid_argument("integer symplectic map must have determinant 1");
  }
}

IntegerSymplecticMap IntegerSymplecticMap::operator*(const IntegerSymplecticMap& r) const {
  return {checked_add(checked_mul(a_, r.a_), checked_mul(b_, r.c_)),
          checked_add(checked_mul(a_, r.b_), checked_mul(b_, r.d_)),
          checked_add(checked_mul(c_, r.a_), checked_mul(d_, r.c_)),
          checked_add(checked_mul(c_, r.b_), checked_mul(d_, r.d_))};
}

IntegerSymplecticMap IntegerSymplecticMap::power(std::int64_t t) const {
  IntegerSymplecticMap base = t < 0 ? inverse() : *this;
  // -INT64_MIN is not representable, and no such power fits anyway.
  if (t == INT64_MIN) throw std::overflow_error("integer matrix power overflows int64");
  std::uint64_t e = static_cast<std::uint64_t>(t < 0 ? -t : t);
  IntegerSymplecticMap result = identity();
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Lattice2 IntegerSymplecticMap::apply(const Lattice2& v) const {
  return {checked_add(checked_mul(a_, v[0]), checked_mul(b_, v[1])),
          checked_add(checked_mul(c_, v[0]), checked_mul(d_, v[1]))};
}

Vec2 IntegerSymplecticMap::apply(const Vec2& v) const {
  return {static_cast<double>(a_) * v[0] + static_cast<double>(b_) * v[1],
          static_cast<double>(c_) * v[0] + static_cast<double>(d_) * v[1]};
}

double wrap_unit(double v) {
  double r = v - std::floor(v);
  return r >= 1.0 ? 0.0 : r;
}

TorusPoint::TorusPoint(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("torus point must be finite");
  x_ = wrap_unit(x);
  y_ = wrap_unit(y);
}

double torus_distance(const TorusPoint& p, const TorusPoint& q) {
  double dx = std::abs(p.x() - q.x());
  double dy = std::abs(p.y() - q.y());
  dx = std::min(dx, 1.0 - dx);
  dy = std::min(dy, 1.0 - dy);
  return std::hypot(dx, dy);
}

const Vec2& EigenSystem::direction(int j) const {
  if (j == 1) return v1;
  if (j == 2) return v2;
  throw std::invalid_argument("horocycle index must be 1 or 2");
}

double EigenSystem::eigenvalue(int j) const {
  if (j == 1) return k1;
  if (j == 2) return k2;
  throw std::invalid_argument("horocycle index must be 1 or 2");
}

double EigenSystem::exponent(int j) const {
  if (j == 1) return lambda1;
  if (j == 2) return lambda2;
  throw std::invalid_argument("horocycle index must be 1 or 2");
}

EigenSystem eigen_system(const IntegerSymplecticMap& phi) {
  const std::int64_t tr = phi.trace();
  if (tr <= 2) {
    throw std::domain_error("map is not hyperbolic with positive eigenvalues (trace " + std::to_string(tr) +
                            ", need trace > 2)");
  }
  const double trd = static_cast<double>(tr);
  EigenSystem e;
  e.k1 = 0.5 * (trd + std::sqrt(trd * trd - 4.0));
  e.k2 = 1.0 / e.k1;
  e.lambda1 = std::log(e.k1);
  e.lambda2 = -e.lambda1;

  auto eigenvector = [&](double k) {
    Vec2 v = phi.b() != 0 ? Vec2{static_cast<double>(phi.b()), k - static_cast<double>(phi.a())}
                          : Vec2{k - static_cast<double>(phi.d()), static_cast<double>(phi.c())};
    const double n = std::hypot(v[0], v[1]);
    v = {v[0] / n, v[1] / n};
    if (v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0)) v = {-v[0], -v[1]};
    return v;
  };
  e.v1 = eigenvector(e.k1);
  e.v2 = eigenvector(e.k2);
  return e;
}

double growth_factor(const EigenSystem& eig, int j, std::int64_t t) {
  const double base = t >= 0 ? eig.eigenvalue(j) : 1.0 / eig.eigenvalue(j);
  double r = 1.0;
  for (std::int64_t i = 0, n = t < 0 ? -t : t; i < n; ++i) r *= base;
  return r;
}

TorusPoint cat_apply(const IntegerSymplecticMap& phi, const TorusPoint& m, std::int64_t t) {
  const IntegerSymplecticMap p = phi.power(t);
  return {wrap_unit(frac_of_product(p.a(), m.x()) + frac_of_product(p.b(), m.y())),
          wrap_unit(frac_of_product(p.c(), m.x()) + frac_of_product(p.d(), m.y()))};
}

TorusPoint horocycle_shift(const TorusPoint& m, const Vec2& v, double s) {
  return {m.x() + v[0] * s, m.y() + v[1] * s};
}

double conjugation_defect_cat(const IntegerSymplecticMap& phi, const Vec2& direction, double rate,
                              std::int64_t t, double s, const TorusPoint& m) {
  TorusPoint lhs = cat_apply(phi, m, -t);
  lhs = horocycle_shift(lhs, direction, s);
  lhs = cat_apply(phi, lhs, t);
  const TorusPoint rhs = horocycle_shift(m, direction, s * rate);
  return torus_distance(lhs, rhs);
}

double conjugation_defect_cat(const IntegerSymplecticMap& phi, int j, std::int64_t t, double s,
                              const TorusPoint& m) {
  const EigenSystem eig = eigen_system(phi);
  return conjugation_defect_cat(phi, eig.direction(j), growth_factor(eig, j, t), t, s, m);
}

double differential_check_cat(const IntegerSymplecticMap& phi, const Vec2& direction, double rate,
                              std::int64_t t) {
  const Vec2 image = phi.power(t).apply(direction);
  return std::hypot(image[0] - rate * direction[0], image[1] - rate * direction[1]);
}

double differential_check_cat(const IntegerSymplecticMap& phi, int j, std::int64_t t) {
  const EigenSystem eig = eigen_system(phi);
  return differential_check_cat(phi, eig.direction(j), growth_factor(eig, j, t), t);
}

std::vector<SeparationSample> separation_growth(const IntegerSymplecticMap& phi, const TorusPoint& m,
                                                const Vec2& coeffs, double eps,
                                                std::int64_t horizon) {
  if (horizon < 0) throw std::invalid_argument("separation horizon must be non-negative");
  if (!(eps >= 0.0)) throw std::invalid_argument("separation eps must be non-negative");
  const EigenSystem eig = eigen_system(phi);
  // Only the expanding component grows; the offset must stay below half a period.
  const double a1 = std::abs(coeffs[0]), a2 = std::abs(coeffs[1]);
  auto reach = [&](std::int64_t t) { return eps * (a1 * std::exp(eig.lambda1 * static_cast<double>(t)) + a2); };
  if (eps > 0.0 && reach(horizon) >= 0.5) {
    std::int64_t max_t = a1 > 0.0 ? static_cast<std::int64_t>(std::floor(std::log(0.5 / (eps * a1)) / eig.lambda1)) : -1;
    while (max_t >= 0 && reach(max_t) >= 0.5) --max_t;
    throw std::invalid_argument("horizon " + std::to_string(horizon) + " too long for eps; max valid T is " +
                                std::to_string(max_t));
  }
  const TorusPoint shifted(m.x() + eps * (coeffs[0] * eig.v1[0] + coeffs[1] * eig.v2[0]),
                           m.y() + eps * (coeffs[0] * eig.v1[1] + coeffs[1] * eig.v2[1]));
  std::vector<SeparationSample> out;
  out.reserve(static_cast<std::size_t>(horizon) + 1);
  for (std::int64_t t = 0; t <= horizon; ++t) {
    out.push_back({t, torus_distance(cat_apply(phi, m, t), cat_apply(phi, shifted, t))});
  }
  return out;
}

double fitted_log_slope(std::span<const SeparationSample> samples) {
  double n = 0, st = 0, sy = 0, stt = 0, sty = 0;
  for (const auto& s : samples) {
    if (!(s.distance > 0.0)) continue;
    const double t = static_cast<double>(s.t);
    const double y = std::log(s.distance);
    n += 1;
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double denom = n * stt - st * st;
  if (n < 2 || denom == 0.0) throw std::invalid_argument("slope fit needs two distinct positive samples");
  return (n * sty - st * sy) / denom;
}

std::complex<double> birkhoff_average(const IntegerSymplecticMap& phi, const Lattice2& nu,
                                      const TorusPoint& m, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("Birkhoff average needs N >= 1");
  if (nu[0] == 0 && nu[1] == 0) return {1.0, 0.0};
  const double n1 = static_cast<double>(nu[0]);
  const double n2 = static_cast<double>(nu[1]);
  std::complex<double> sum{0.0, 0.0};
  TorusPoint p = m;
  for (std::int64_t t = 0; t < n; ++t) {
    sum += std::polar(1.0, 2.0 * std::numbers::pi * (n1 * p.x() + n2 * p.y()));
    p = cat_apply(phi, p, 1);
  }
  return sum / static_cast<double>(n);
}

}  // namespace anosov
