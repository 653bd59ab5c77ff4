#pragma once

// SL(2,R) acting on the Poincare half-plane; geodesic and horocycle flows as
// right multiplication by one-parameter subgroups.

#include <array>

namespace anosov {

/// Real 2x2 matrix (a b; c d) with determinant 1.
class MoebiusMatrix {
 public:
  /// Throws std::invalid_argument if |ad - bc - 1| > 1e-12.
  MoebiusMatrix(double a, double b, double c, double d);

  static MoebiusMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double det() const { return a_ * d_ - b_ * c_; }

  /// Product, rescaled by 1/sqrt(det) so the result keeps unit determinant.
  MoebiusMatrix operator*(const MoebiusMatrix& rhs) const;

  /// Entry-wise difference as a plain array (a, b, c, d).
  std::array<double, 4> minus(const MoebiusMatrix& rhs) const;

  bool operator==(const MoebiusMatrix&) const = default;

 private:
  struct Unchecked {};
  MoebiusMatrix(Unchecked, double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
  double a_, b_, c_, d_;
};

double frobenius_norm(const std::array<double, 4>& m);

struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;
};

/// Throws std::invalid_argument unless y > 0.
HalfPlanePoint make_half_plane_point(double x, double y);

/// (az + b)/(cz + d). Throws std::domain_error if |cz + d| < 1e-300.
HalfPlanePoint moebius_apply(const MoebiusMatrix& g, const HalfPlanePoint& z);

/// diag(e^{-t/2}, e^{t/2}).
MoebiusMatrix geodesic_matrix(double t);

/// m * geodesic_matrix(t).
MoebiusMatrix geodesic_flow(const MoebiusMatrix& m, double t);

/// j = 1: (1 s; 0 1), expanding. j = 2: (1 0; s 1), contracting.
MoebiusMatrix horocycle_matrix(int j, double s);

/// Lyapunov exponents under the right-action convention: +1 for j = 1, -1 for j = 2.
double horocycle_exponent(int j);

/// Frobenius norm of xi(-t) xi_j(s) xi(t) - xi_j(s e^{lambda t}).
double conjugation_defect_geodesic(int j, double t, double s);
double conjugation_defect_geodesic(int j, double t, double s, double lambda);

/// Entry-wise max of the gap between the central-difference s-derivatives at
/// s = 0 of m xi(-t) xi_j(s) xi(t) and e^{lambda t} m xi_j(s).
/// Throws std::invalid_argument unless h lies in [1e-8, 1e-3].
double horocycle_differential_check(int j, double t, const MoebiusMatrix& m, double h);
double horocycle_differential_check(int j, double t, const MoebiusMatrix& m, double h, double lambda);

/// Distance for ds^2 = (dx^2 + dy^2)/y^2, evaluated as 2 asinh(|z1 - z2| / (2 sqrt(y1 y2))).
double hyperbolic_distance(const HalfPlanePoint& z1, const HalfPlanePoint& z2);

/// Relative gap between J(z) y(gz)^{-2} and y(z)^{-2}, J the central-difference
/// area Jacobian of z -> gz with step h.
double measure_invariance_check(const MoebiusMatrix& g, const HalfPlanePoint& z, double h);

}  // namespace anosov
