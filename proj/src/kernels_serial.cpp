#include <cmath>
#include <stdexcept>

#include "anosov/kernels.hpp"
#include "weyl_accumulate.hpp"

namespace anosov::kernels {

WeylPolynomial weyl_mul_serial(const WeylPolynomial& a, const WeylPolynomial& b) {
  if (!same_gamma(a.gamma(), b.gamma())) throw std::invalid_argument("Weyl elements with different gamma cannot be combined");
  const double gamma = a.gamma();
  const detail::TermList lhs(a.terms().begin(), a.terms().end());
  const detail::TermList rhs(b.terms().begin(), b.terms().end());
  std::vector<Complex> products;
  products.reserve(lhs.size() * rhs.size());
  for (const auto& [nu, ca] : lhs) {
    for (const auto& [mu, cb] : rhs) {
      const Complex phase = std::polar(1.0, gamma * static_cast<double>(symplectic_form(nu, mu)));
      products.push_back((ca * cb) * phase);
    }
  }
  return {gamma, detail::accumulate_products(lhs, rhs, products)};
}

std::vector<std::complex<double>> birkhoff_batch_serial(const IntegerSymplecticMap& phi, const Lattice2& nu,
                                                        std::span<const TorusPoint> points, std::int64_t n) {
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(birkhoff_average(phi, nu, p, n));
  return out;
}

std::vector<std::int64_t> lebesgue_histogram_serial(const IntegerSymplecticMap& phi,
                                                    std::span<const TorusPoint> points, std::int64_t t, int cells) {
  if (cells < 1) throw std::invalid_argument("histogram needs at least one cell");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cells) * static_cast<std::size_t>(cells), 0);
  for (const auto& p : points) {
    const TorusPoint q = cat_apply(phi, p, t);
    const auto cx = static_cast<std::size_t>(q.x() * cells);
    const auto cy = static_cast<std::size_t>(q.y() * cells);
    ++counts[cy * static_cast<std::size_t>(cells) + cx];
  }
  return counts;
}

std::vector<SylvesterResult> sylvester_batch_serial(std::span<const SylvesterCase> cases) {
  std::vector<SylvesterResult> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(sylvester_obstruction(c.h, c.lambda));
  return out;
}

SearchResult defect_search_serial(const Eigen::MatrixXcd& h, double lambda, const SearchOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("defect search needs at least one trial");
  SearchResult best;
  for (int i = 0; i < opts.trials; ++i) {
    SearchResult r = conjugation_defect_trial(h, lambda, opts, i);
    if (best.best_trial < 0 || r.best_defect < best.best_defect) best = std::move(r);
  }
  return best;
}

}  // namespace anosov::kernels
