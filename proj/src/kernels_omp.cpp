#include <cmath>
#include <exception>
#include <stdexcept>

#include "anosov/kernels.hpp"
#include "weyl_accumulate.hpp"

namespace anosov::kernels {
namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow
// once the team has joined.
class ExceptionSink {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(anosov_exception_sink)
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::exception_ptr first_;
};

}  // namespace

WeylPolynomial weyl_mul_parallel(const WeylPolynomial& a, const WeylPolynomial& b) {
  if (!same_gamma(a.gamma(), b.gamma())) throw std::invalid_argument("Weyl elements with different gamma cannot be combined");
  const double gamma = a.gamma();
  const detail::TermList lhs(a.terms().begin(), a.terms().end());
  const detail::TermList rhs(b.terms().begin(), b.terms().end());
  const auto nb = static_cast<std::ptrdiff_t>(rhs.size());
  const auto total = static_cast<std::ptrdiff_t>(lhs.size()) * nb;
  std::vector<Complex> products(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(static) if (total > 4096)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto& [nu, ca] = lhs[static_cast<std::size_t>(idx / nb)];
    const auto& [mu, cb] = rhs[static_cast<std::size_t>(idx % nb)];
    const Complex phase = std::polar(1.0, gamma * static_cast<double>(symplectic_form(nu, mu)));
    products[static_cast<std::size_t>(idx)] = (ca * cb) * phase;
  }

  return {gamma, detail::accumulate_products(lhs, rhs, products)};
}

std::vector<std::complex<double>> birkhoff_batch_parallel(const IntegerSymplecticMap& phi, const Lattice2& nu,
                                                          std::span<const TorusPoint> points, std::int64_t n) {
  std::vector<std::complex<double>> out(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
  ExceptionSink sink;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    sink.run([&] { out[static_cast<std::size_t>(i)] = birkhoff_average(phi, nu, points[static_cast<std::size_t>(i)], n); });
  }
  sink.rethrow();
  return out;
}

std::vector<std::int64_t> lebesgue_histogram_parallel(const IntegerSymplecticMap& phi,
                                                      std::span<const TorusPoint> points, std::int64_t t, int cells) {
  if (cells < 1) throw std::invalid_argument("histogram needs at least one cell");
  const auto bins = static_cast<std::size_t>(cells) * static_cast<std::size_t>(cells);
  const IntegerSymplecticMap power = phi.power(t);
  std::vector<std::int64_t> counts(bins, 0);
  const auto count = static_cast<std::ptrdiff_t>(points.size());
  ExceptionSink sink;
#pragma omp parallel
  {
    std::vector<std::int64_t> local(bins, 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      sink.run([&] {
        const TorusPoint q = cat_apply(power, points[static_cast<std::size_t>(i)], 1);
        const auto cx = static_cast<std::size_t>(q.x() * cells);
        const auto cy = static_cast<std::size_t>(q.y() * cells);
        ++local[cy * static_cast<std::size_t>(cells) + cx];
      });
    }
#pragma omp critical
    for (std::size_t b = 0; b < bins; ++b) counts[b] += local[b];
  }
  sink.rethrow();
  return counts;
}

std::vector<SylvesterResult> sylvester_batch_parallel(std::span<const SylvesterCase> cases) {
  std::vector<SylvesterResult> out(cases.size());
  const auto count = static_cast<std::ptrdiff_t>(cases.size());
  ExceptionSink sink;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& c = cases[static_cast<std::size_t>(i)];
    sink.run([&] { out[static_cast<std::size_t>(i)] = sylvester_obstruction(c.h, c.lambda); });
  }
  sink.rethrow();
  return out;
}

SearchResult defect_search_parallel(const Eigen::MatrixXcd& h, double lambda, const SearchOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("defect search needs at least one trial");
  std::vector<SearchResult> results(static_cast<std::size_t>(opts.trials));
  ExceptionSink sink;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < opts.trials; ++i) {
    sink.run([&] { results[static_cast<std::size_t>(i)] = conjugation_defect_trial(h, lambda, opts, i); });
  }
  sink.rethrow();
  SearchResult best = results.front();
  for (auto& r : results) {
    if (r.best_defect < best.best_defect) best = std::move(r);
  }
  return best;
}

}  // namespace anosov::kernels
