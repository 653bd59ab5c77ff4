#pragma once

// Shared by the serial and OpenMP products: sums the per-pair products in
// pair-enumeration order, so both kernels give bit-identical coefficients.

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "anosov/weyl.hpp"

namespace anosov::kernels::detail {

using TermList = std::vector<std::pair<WeylIndex, Complex>>;

inline WeylTerms accumulate_products(const TermList& lhs, const TermList& rhs, std::span<const Complex> products) {
  WeylTerms out;
  if (lhs.empty() || rhs.empty()) return out;
  const auto nb = rhs.size();
  auto bounds = [](const TermList& t, int axis) {
    auto [lo, hi] = std::minmax_element(t.begin(), t.end(),
                                        [axis](const auto& p, const auto& q) { return p.first[axis] < q.first[axis]; });
    return std::pair{lo->first[axis], hi->first[axis]};
  };
  const auto [a0, b0] = bounds(lhs, 0);
  const auto [a1, b1] = bounds(lhs, 1);
  const auto [c0, d0] = bounds(rhs, 0);
  const auto [c1, d1] = bounds(rhs, 1);
  const std::int64_t lo0 = a0 + c0, lo1 = a1 + c1;
  const std::int64_t w0 = b0 + d0 - lo0 + 1, w1 = b1 + d1 - lo1 + 1;

  constexpr std::int64_t kDenseLimit = std::int64_t{1} << 22;
  if (w0 > 0 && w1 > 0 && w0 <= kDenseLimit / w1) {
    // Row-major in (nu1, nu2) is the map's lexicographic order.
    std::vector<Complex> dense(static_cast<std::size_t>(w0 * w1));
    std::vector<char> touched(dense.size(), 0);
    for (std::size_t idx = 0; idx < products.size(); ++idx) {
      const WeylIndex& nu = lhs[idx / nb].first;
      const WeylIndex& mu = rhs[idx % nb].first;
      const auto cell = static_cast<std::size_t>((nu[0] + mu[0] - lo0) * w1 + (nu[1] + mu[1] - lo1));
      dense[cell] += products[idx];
      touched[cell] = 1;
    }
    for (std::size_t cell = 0; cell < dense.size(); ++cell) {
      if (!touched[cell]) continue;
      const auto c = static_cast<std::int64_t>(cell);
      out.emplace_hint(out.end(), WeylIndex{lo0 + c / w1, lo1 + c % w1}, dense[cell]);
    }
    return out;
  }
  for (std::size_t idx = 0; idx < products.size(); ++idx) {
    const WeylIndex& nu = lhs[idx / nb].first;
    const WeylIndex& mu = rhs[idx % nb].first;
    out[{nu[0] + mu[0], nu[1] + mu[1]}] += products[idx];
  }
  return out;
}

}  // namespace anosov::kernels::detail
