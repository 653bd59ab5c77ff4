#pragma once

// Arnold cat dynamics on the unit torus: integer symplectic maps, their
// stable/unstable eigen-directions, horocycle shifts along those directions,
// and the two equivalent forms of the hyperbolicity condition.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace anosov {

using Vec2 = std::array<double, 2>;
using Lattice2 = std::array<std::int64_t, 2>;

/// Symplectic pairing k(u, v) = u1 v2 - u2 v1 on Z^2.
constexpr std::int64_t symplectic_form(const Lattice2& u, const Lattice2& v) {
  return u[0] * v[1] - u[1] * v[0];
}

/// 2x2 integer matrix (a b; c d) with unit determinant.
class IntegerSymplecticMap {
 public:
  /// Throws std::invalid_argument unless ad - bc == 1.
  IntegerSymplecticMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  /// The cat map (1 1; 1 2).
  static IntegerSymplecticMap arnold_cat() { return {1, 1, 1, 2}; }
  static IntegerSymplecticMap identity() { return {1, 0, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t trace() const { return a_ + d_; }
  bool symmetric() const { return b_ == c_; }

  IntegerSymplecticMap inverse() const { return {d_, -b_, -c_, a_}; }

  /// Exact product; throws std::overflow_error if an entry leaves int64.
  IntegerSymplecticMap operator*(const IntegerSymplecticMap& rhs) const;

  /// Exact power by repeated squaring, negative t through the inverse.
  IntegerSymplecticMap power(std::int64_t t) const;

  Lattice2 apply(const Lattice2& v) const;
  Vec2 apply(const Vec2& v) const;

  bool operator==(const IntegerSymplecticMap&) const = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// Point of [0,1)^2. Coordinates are reduced mod 1 on construction.
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }

  bool operator==(const TorusPoint&) const = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Reduce to [0,1). Never returns 1.0.
double wrap_unit(double v);

/// Minimum Euclidean distance over the nine mod-1 translates.
double torus_distance(const TorusPoint& p, const TorusPoint& q);

struct EigenSystem {
  Vec2 v1;  ///< expanding direction, unit length, positive first component
  Vec2 v2;  ///< contracting direction
  double k1 = 0.0;
  double k2 = 0.0;
  double lambda1 = 0.0;  ///< ln k1
  double lambda2 = 0.0;  ///< ln k2

  const Vec2& direction(int j) const;
  double eigenvalue(int j) const;
  double exponent(int j) const;
};

/// Throws std::domain_error unless trace > 2 (real eigenvalues k1 > 1 > k2 > 0).
EigenSystem eigen_system(const IntegerSymplecticMap& phi);

/// k_j^t by repeated multiplication of the eigenvalue (or its inverse for t < 0).
double growth_factor(const EigenSystem& eig, int j, std::int64_t t);

/// phi^t m (mod 1). The integer power is exact; the mod-1 reduction of each
/// integer-times-coordinate product is error free.
TorusPoint cat_apply(const IntegerSymplecticMap& phi, const TorusPoint& m, std::int64_t t);

/// Horocycle theta(s): m + V s (mod 1).
TorusPoint horocycle_shift(const TorusPoint& m, const Vec2& v, double s);

/// Torus distance between phi^t theta(s) phi^{-t} m and theta(s * rate) m,
/// with theta generated by `direction`.
double conjugation_defect_cat(const IntegerSymplecticMap& phi, const Vec2& direction, double rate,
                              std::int64_t t, double s, const TorusPoint& m);

/// Same, with V_j and rate e^{lambda_j t} taken from the eigensystem.
double conjugation_defect_cat(const IntegerSymplecticMap& phi, int j, std::int64_t t, double s,
                              const TorusPoint& m);

/// |phi^t V - rate V| (Euclidean). The differential of a linear torus map is
/// the matrix itself.
double differential_check_cat(const IntegerSymplecticMap& phi, const Vec2& direction, double rate,
                              std::int64_t t);
double differential_check_cat(const IntegerSymplecticMap& phi, int j, std::int64_t t);

struct SeparationSample {
  std::int64_t t;
  double distance;
};

/// Distances between phi^t m and phi^t (m + eps (a1 V1 + a2 V2)), t = 0..horizon.
/// Throws std::invalid_argument when eps (|a1| k1^horizon + |a2|) >= 1/2; the message names
/// the largest admissible horizon.
std::vector<SeparationSample> separation_growth(const IntegerSymplecticMap& phi, const TorusPoint& m,
                                                const Vec2& coeffs, double eps,
                                                std::int64_t horizon);

/// Least-squares slope of ln(distance) against t, zero distances skipped.
/// Throws std::invalid_argument with fewer than two usable samples.
double fitted_log_slope(std::span<const SeparationSample> samples);

/// (1/N) sum_{t<N} exp(2 pi i nu . phi^t m), orbit generated by iteration.
std::complex<double> birkhoff_average(const IntegerSymplecticMap& phi, const Lattice2& nu,
                                      const TorusPoint& m, std::int64_t n);

}  // namespace anosov
