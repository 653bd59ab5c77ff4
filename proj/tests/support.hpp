#pragma once

// Seeded generators and brute-force oracles shared by the unit tests. The
// oracles deliberately avoid the library's own code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "anosov/weyl.hpp"

namespace testing_support {

using Rng = std::mt19937_64;
using anosov::Complex;
using anosov::WeylIndex;
using anosov::WeylPolynomial;

// ln((3 + sqrt 5) / 2), to 16 digits from the closed form.
inline constexpr double kLambda1 = 0.9624236501192069;

inline Rng seeded(std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t{0x5eed}};
  return Rng(seq);
}

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Support size in [1, max_support], indices in [-max_index, max_index]^2,
/// coefficients uniform in the unit square, rescaled to unit l2 norm.
inline WeylPolynomial random_polynomial(Rng& rng, double gamma, int max_support, std::int64_t max_index) {
  const auto size = uniform_int(rng, 1, max_support);
  anosov::WeylTerms terms;
  while (static_cast<std::int64_t>(terms.size()) < size) {
    terms[{uniform_int(rng, -max_index, max_index), uniform_int(rng, -max_index, max_index)}] =
        Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
  }
  double norm = 0.0;
  for (const auto& [nu, c] : terms) norm += std::norm(c);
  for (auto& [nu, c] : terms) c /= std::sqrt(norm);
  return {gamma, std::move(terms)};
}

/// Product by the definition, phases from exp(i gamma k) on the complex exponential.
inline std::map<WeylIndex, Complex> naive_product(const WeylPolynomial& a, const WeylPolynomial& b) {
  std::map<WeylIndex, Complex> out;
  const double gamma = a.gamma();
  for (const auto& [nu, x] : a.terms()) {
    for (const auto& [mu, y] : b.terms()) {
      const double kappa = static_cast<double>(nu[0] * mu[1] - nu[1] * mu[0]);
      out[{nu[0] + mu[0], nu[1] + mu[1]}] += x * y * std::exp(Complex(0.0, gamma * kappa));
    }
  }
  return out;
}

inline double max_gap(const std::map<WeylIndex, Complex>& expected, const WeylPolynomial& got) {
  double gap = 0.0;
  for (const auto& [nu, c] : expected) gap = std::max(gap, std::abs(c - got.coefficient(nu)));
  for (const auto& [nu, c] : got.terms()) {
    if (!expected.contains(nu)) gap = std::max(gap, std::abs(c));
  }
  return gap;
}

}  // namespace testing_support
