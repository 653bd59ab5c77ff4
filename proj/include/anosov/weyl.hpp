#pragma once

// Finite linear combinations of Weyl unitaries W(nu), nu in Z^2, with the
// twisted product W(nu) W(nu') = exp(i gamma k(nu, nu')) W(nu + nu'), the
// tracial state rho(W(nu)) = delta_{nu,0}, and the quantum cat automorphisms.

#include <complex>
#include <cstdint>
#include <map>

#include "anosov/torus.hpp"

namespace anosov {

using WeylIndex = Lattice2;
using Complex = std::complex<double>;
using WeylTerms = std::map<WeylIndex, Complex>;

/// Coefficients with modulus below this are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-15;

/// True when the two deformation parameters are bit-identical.
bool same_gamma(double g1, double g2);

class WeylPolynomial {
 public:
  explicit WeylPolynomial(double gamma);
  WeylPolynomial(double gamma, WeylTerms terms);

  static WeylPolynomial generator(double gamma, const WeylIndex& nu, Complex coeff = 1.0);
  static WeylPolynomial identity(double gamma) { return generator(gamma, {0, 0}); }

  double gamma() const { return gamma_; }
  const WeylTerms& terms() const { return terms_; }
  Complex coefficient(const WeylIndex& nu) const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  WeylPolynomial operator+(const WeylPolynomial& rhs) const;
  WeylPolynomial operator-(const WeylPolynomial& rhs) const;
  WeylPolynomial operator*(Complex scale) const;

  bool operator==(const WeylPolynomial& rhs) const;

 private:
  double gamma_;
  WeylTerms terms_;
};

/// Twisted product. Throws std::invalid_argument on a gamma mismatch.
WeylPolynomial weyl_mul(const WeylPolynomial& a, const WeylPolynomial& b);

/// Antilinear involution with W(nu)* = W(-nu).
WeylPolynomial adjoint(const WeylPolynomial& a);

/// Coefficient of W(0).
Complex trace_state(const WeylPolynomial& a);

/// rho(a b), reading off only the W(0) coefficient of the product.
Complex trace_of_product(const WeylPolynomial& a, const WeylPolynomial& b);

/// sqrt(rho(a* a)).
double gns_norm(const WeylPolynomial& a);

/// Largest coefficient modulus of a - b.
double max_coefficient_gap(const WeylPolynomial& a, const WeylPolynomial& b);

/// Linear functional on the polynomial algebra, stored by its values F(W(nu)).
class WeylFunctional {
 public:
  explicit WeylFunctional(double gamma) : gamma_(gamma) {}
  WeylFunctional(double gamma, WeylTerms values);

  double gamma() const { return gamma_; }
  const WeylTerms& values() const { return values_; }
  Complex value(const WeylIndex& nu) const;

  /// sum_nu F(W(nu)) a_nu
  Complex evaluate(const WeylPolynomial& a) const;

  WeylFunctional operator-(const WeylFunctional& rhs) const;

 private:
  double gamma_;
  WeylTerms values_;
};

/// Functional satisfying F(1) = 1 and F(W(-nu)) = conj F(W(nu)).
class StateFunctional {
 public:
  /// Throws std::invalid_argument if either invariant fails by more than 1e-12.
  StateFunctional(double gamma, WeylTerms values);

  static StateFunctional tracial(double gamma) { return {gamma, {{{0, 0}, 1.0}}}; }

  double gamma() const { return functional_.gamma(); }
  const WeylTerms& values() const { return functional_.values(); }
  Complex value(const WeylIndex& nu) const { return functional_.value(nu); }
  const WeylFunctional& functional() const { return functional_; }

  WeylFunctional operator-(const StateFunctional& rhs) const { return functional_ - rhs.functional_; }

 private:
  WeylFunctional functional_;
};

/// Vector state A -> rho(B* A B) / rho(B* B). Throws std::invalid_argument for B = 0.
StateFunctional state_from_element(const WeylPolynomial& b);

/// Dynamics and horocycles of a quantized hyperbolic toral automorphism.
/// The map must be symmetric so that its eigenvectors also diagonalize the
/// transpose acting on frequencies.
class QuantumCat {
 public:
  explicit QuantumCat(IntegerSymplecticMap phi = IntegerSymplecticMap::arnold_cat());

  const IntegerSymplecticMap& map() const { return phi_; }
  const EigenSystem& eigen() const { return eig_; }

  /// W(nu) -> W(phi^{-t} nu).
  WeylPolynomial alpha(const WeylPolynomial& a, std::int64_t t) const;

  /// W(nu) -> exp(2 pi i (nu . V_j) s) W(nu).
  WeylPolynomial sigma(const WeylPolynomial& a, int j, double s) const;

  /// GNS norm of alpha_t sigma_j(s) alpha_{-t} A - sigma_j(s rate) A.
  double hyperbolicity_defect(const WeylPolynomial& a, int j, std::int64_t t, double s, double rate) const;
  /// Same with rate = k_j^t.
  double hyperbolicity_defect(const WeylPolynomial& a, int j, std::int64_t t, double s) const;

  /// Dual of alpha: (F o alpha_t)(W(phi^t nu)) = F(W(nu)); values move from nu to phi^t nu.
  WeylFunctional dual_evolve(const WeylFunctional& f, std::int64_t t) const;
  StateFunctional dual_evolve(const StateFunctional& f, std::int64_t t) const;

  /// l2 norm of the horocycle generator applied to F: values scale by 2 pi i (nu . V_j).
  double dual_horocycle_generator_norm(const WeylFunctional& f, int j) const;

  /// Generator norm of dual_evolve(F1 - F2, t) over that of F1 - F2.
  /// Throws std::invalid_argument when F1 - F2 has zero generator norm.
  double divergence_ratio(const StateFunctional& f1, const StateFunctional& f2, int j, std::int64_t t) const;

  /// e^{lambda_j t} as k_j^t.
  double growth(int j, std::int64_t t) const { return growth_factor(eig_, j, t); }

 private:
  IntegerSymplecticMap phi_;
  EigenSystem eig_;
};

}  // namespace anosov
