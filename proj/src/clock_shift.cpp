#include "anosov/clock_shift.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace anosov {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

double clock_shift_gamma(int n) { return std::numbers::pi / n; }

Eigen::MatrixXcd finite_dim_rep(const WeylIndex& nu, int n) {
  if (n < 2) throw std::invalid_argument("clock-shift representation needs N >= 2");
  const std::int64_t big_n = n;
  Eigen::MatrixXcd rep = Eigen::MatrixXcd::Zero(n, n);
  for (std::int64_t k = 0; k < big_n; ++k) {
    // rep e_k = exp(i pi (2 nu1 j - nu1 nu2) / N) e_j, j = k + nu2 mod N
    const std::int64_t j = mod(k + nu[1], big_n);
    const std::int64_t exponent = mod(2 * nu[0] * j - nu[0] * nu[1], 2 * big_n);
    rep(j, k) = std::polar(1.0, std::numbers::pi * static_cast<double>(exponent) / n);
  }
  return rep;
}

std::complex<double> normalized_trace(const WeylIndex& nu, int n) {
  if (n < 2) throw std::invalid_argument("clock-shift representation needs N >= 2");
  if (2 * std::abs(nu[0]) >= n || 2 * std::abs(nu[1]) >= n) {
    throw std::invalid_argument("index (" + std::to_string(nu[0]) + "," + std::to_string(nu[1]) +
                                ") outside the trace window |nu_i| < N/2 for N = " + std::to_string(n));
  }
  return finite_dim_rep(nu, n).trace() / static_cast<double>(n);
}

}  // namespace anosov
