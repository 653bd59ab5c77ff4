#include "anosov/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anosov/kernels.hpp"

namespace anosov {
namespace {

void prune(WeylTerms& terms) {
  std::erase_if(terms, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

void require_same_gamma(double g1, double g2) {
  if (!same_gamma(g1, g2)) throw std::invalid_argument("Weyl elements with different gamma cannot be combined");
}

WeylIndex negate(const WeylIndex& nu) { return {-nu[0], -nu[1]}; }

double dot(const WeylIndex& nu, const Vec2& v) {
  return static_cast<double>(nu[0]) * v[0] + static_cast<double>(nu[1]) * v[1];
}

}  // namespace

bool same_gamma(double g1, double g2) { return std::bit_cast<std::uint64_t>(g1) == std::bit_cast<std::uint64_t>(g2); }

WeylPolynomial::WeylPolynomial(double gamma) : gamma_(gamma) {
  if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
}

WeylPolynomial::WeylPolynomial(double gamma, WeylTerms terms) : WeylPolynomial(gamma) {
  terms_ = std::move(terms);
  prune(terms_);
}

WeylPolynomial WeylPolynomial::generator(double gamma, const WeylIndex& nu, Complex coeff) {
  return {gamma, {{nu, coeff}}};
}

Complex WeylPolynomial::coefficient(const WeylIndex& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Complex{} : it->second;
}

WeylPolynomial WeylPolynomial::operator+(const WeylPolynomial& rhs) const {
  require_same_gamma(gamma_, rhs.gamma_);
  WeylTerms out = terms_;
  for (const auto& [nu, c] : rhs.terms_) out[nu] += c;
  return {gamma_, std::move(out)};
}

WeylPolynomial WeylPolynomial::operator-(const WeylPolynomial& rhs) const {
  require_same_gamma(gamma_, rhs.gamma_);
  WeylTerms out = terms_;
  for (const auto& [nu, c] : rhs.terms_) out[nu] -= c;
  return {gamma_, std::move(out)};
}

WeylPolynomial WeylPolynomial::operator*(Complex scale) const {
  WeylTerms out = terms_;
  for (auto& kv : out) kv.second *= scale;
  return {gamma_, std::move(out)};
}

bool WeylPolynomial::operator==(const WeylPolynomial& rhs) const {
  return same_gamma(gamma_, rhs.gamma_) && terms_ == rhs.terms_;
}

WeylPolynomial weyl_mul(const WeylPolynomial& a, const WeylPolynomial& b) { return kernels::weyl_mul_parallel(a, b); }

WeylPolynomial adjoint(const WeylPolynomial& a) {
  WeylTerms out;
  for (const auto& [nu, c] : a.terms()) out.emplace(negate(nu), std::conj(c));
  return {a.gamma(), std::move(out)};
}

Complex trace_state(const WeylPolynomial& a) { return a.coefficient({0, 0}); }

Complex trace_of_product(const WeylPolynomial& a, const WeylPolynomial& b) {
  require_same_gamma(a.gamma(), b.gamma());
  // Only nu + nu' = 0 contributes, and k(nu, -nu) = 0 so the twist is trivial.
  Complex sum{};
  for (const auto& [nu, c] : a.terms()) sum += c * b.coefficient(negate(nu));
  return sum;
}

double gns_norm(const WeylPolynomial& a) { return std::sqrt(std::max(0.0, trace_of_product(adjoint(a), a).real())); }

double max_coefficient_gap(const WeylPolynomial& a, const WeylPolynomial& b) {
  require_same_gamma(a.gamma(), b.gamma());
  WeylTerms diff = a.terms();
  for (const auto& [nu, c] : b.terms()) diff[nu] -= c;
  double worst = 0.0;
  for (const auto& kv : diff) worst = std::max(worst, std::abs(kv.second));
  return worst;
}

WeylFunctional::WeylFunctional(double gamma, WeylTerms values) : gamma_(gamma), values_(std::move(values)) {
  if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
  prune(values_);
}

Complex WeylFunctional::value(const WeylIndex& nu) const {
  auto it = values_.find(nu);
  return it == values_.end() ? Complex{} : it->second;
}

Complex WeylFunctional::evaluate(const WeylPolynomial& a) const {
  require_same_gamma(gamma_, a.gamma());
  Complex sum{};
  for (const auto& [nu, c] : a.terms()) sum += value(nu) * c;
  return sum;
}

WeylFunctional WeylFunctional::operator-(const WeylFunctional& rhs) const {
  require_same_gamma(gamma_, rhs.gamma_);
  WeylTerms out = values_;
  for (const auto& [nu, c] : rhs.values_) out[nu] -= c;
  return {gamma_, std::move(out)};
}

StateFunctional::StateFunctional(double gamma, WeylTerms values) : functional_(gamma, std::move(values)) {
  if (std::abs(functional_.value({0, 0}) - 1.0) > 1e-12) throw std::invalid_argument("state must satisfy F(1) = 1");
  for (const auto& [nu, c] : functional_.values()) {
    if (std::abs(functional_.value(negate(nu)) - std::conj(c)) > 1e-12) {
      throw std::invalid_argument("state values must satisfy F(W(-nu)) = conj F(W(nu))");
    }
  }
}

StateFunctional state_from_element(const WeylPolynomial& b) {
  const double norm2 = trace_of_product(adjoint(b), b).real();
  if (!(norm2 > 0.0)) throw std::invalid_argument("vector state needs a nonzero element");
  // rho(W(-mu) W(nu) W(mu - nu)) = exp(-i gamma k(mu, nu)), summed over the support.
  WeylTerms values;
  for (const auto& [mu, bm] : b.terms()) {
    for (const auto& [mu2, bm2] : b.terms()) {
      const WeylIndex nu{mu[0] - mu2[0], mu[1] - mu2[1]};
      const double phase = -b.gamma() * static_cast<double>(symplectic_form(mu, nu));
      values[nu] += std::conj(bm) * bm2 * std::polar(1.0, phase);
    }
  }
  for (auto& kv : values) kv.second /= norm2;
  values[{0, 0}] = 1.0;
  return {b.gamma(), std::move(values)};
}

QuantumCat::QuantumCat(IntegerSymplecticMap phi) : phi_(phi), eig_(eigen_system(phi)) {
  if (!phi_.symmetric()) throw std::invalid_argument("quantum cat needs a symmetric map");
}

WeylPolynomial QuantumCat::alpha(const WeylPolynomial& a, std::int64_t t) const {
  const IntegerSymplecticMap p = phi_.power(-t);
  WeylTerms out;
  for (const auto& [nu, c] : a.terms()) out.emplace(p.apply(nu), c);
  return {a.gamma(), std::move(out)};
}

WeylPolynomial QuantumCat::sigma(const WeylPolynomial& a, int j, double s) const {
  const Vec2& v = eig_.direction(j);
  WeylTerms out;
  for (const auto& [nu, c] : a.terms()) {
    out.emplace(nu, c * std::polar(1.0, 2.0 * std::numbers::pi * dot(nu, v) * s));
  }
  return {a.gamma(), std::move(out)};
}

double QuantumCat::hyperbolicity_defect(const WeylPolynomial& a, int j, std::int64_t t, double s,
                                        double rate) const {
  const WeylPolynomial lhs = alpha(sigma(alpha(a, -t), j, s), t);
  return gns_norm(lhs - sigma(a, j, s * rate));
}

double QuantumCat::hyperbolicity_defect(const WeylPolynomial& a, int j, std::int64_t t, double s) const {
  return hyperbolicity_defect(a, j, t, s, growth(j, t));
}

WeylFunctional QuantumCat::dual_evolve(const WeylFunctional& f, std::int64_t t) const {
  const IntegerSymplecticMap p = phi_.power(t);
  WeylTerms out;
  for (const auto& [nu, c] : f.values()) out.emplace(p.apply(nu), c);
  return {f.gamma(), std::move(out)};
}

StateFunctional QuantumCat::dual_evolve(const StateFunctional& f, std::int64_t t) const {
  WeylFunctional moved = dual_evolve(f.functional(), t);
  return {moved.gamma(), moved.values()};
}

double QuantumCat::dual_horocycle_generator_norm(const WeylFunctional& f, int j) const {
  const Vec2& v = eig_.direction(j);
  double sum = 0.0;
  for (const auto& [nu, c] : f.values()) {
    const double rate = 2.0 * std::numbers::pi * dot(nu, v);
    sum += rate * rate * std::norm(c);
  }
  return std::sqrt(sum);
}

double QuantumCat::divergence_ratio(const StateFunctional& f1, const StateFunctional& f2, int j,
                                    std::int64_t t) const {
  const WeylFunctional diff = f1 - f2;
  const double base = dual_horocycle_generator_norm(diff, j);
  if (!(base > 0.0)) throw std::invalid_argument("states do not separate along this horocycle");
  return dual_horocycle_generator_norm(dual_evolve(diff, t), j) / base;
}

}  // namespace anosov
