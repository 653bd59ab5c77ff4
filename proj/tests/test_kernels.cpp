#include <doctest.h>

#include <cstring>
#include <numbers>

#include <omp.h>

#include "anosov/kernels.hpp"
#include "support.hpp"

using namespace anosov;

namespace {

bool bits_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool bits_equal(const WeylPolynomial& a, const WeylPolynomial& b) {
  if (a.size() != b.size()) return false;
  auto it = b.terms().begin();
  for (const auto& [nu, c] : a.terms()) {
    if (nu != it->first || !bits_equal(c.real(), it->second.real()) || !bits_equal(c.imag(), it->second.imag())) {
      return false;
    }
    ++it;
  }
  return true;
}

struct ThreadCount {
  explicit ThreadCount(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("Weyl product kernels agree bit for bit") {
  const double gamma = std::numbers::pi / 16;
  auto rng = testing_support::seeded(60);
  for (int threads : {1, 4}) {
    ThreadCount guard(threads);
    for (int i = 0; i < 20; ++i) {
      const auto a = testing_support::random_polynomial(rng, gamma, 80, 30);
      const auto b = testing_support::random_polynomial(rng, gamma, 80, 30);
      CHECK(bits_equal(kernels::weyl_mul_serial(a, b), kernels::weyl_mul_parallel(a, b)));
    }
    // Indices too spread out for dense accumulation take the map path.
    const WeylPolynomial far(gamma, {{{-4000000, 0}, 1.0}, {{4000000, 3}, 0.5}});
    const WeylPolynomial near(gamma, {{{0, -4000}, 1.0}, {{1, 4000}, 2.0}});
    CHECK(bits_equal(kernels::weyl_mul_serial(far, near), kernels::weyl_mul_parallel(far, near)));
    CHECK(testing_support::max_gap(testing_support::naive_product(far, near), kernels::weyl_mul_serial(far, near)) < 1e-15);
  }
  CHECK_THROWS_AS(kernels::weyl_mul_parallel(WeylPolynomial(0.1), WeylPolynomial(0.2)), std::invalid_argument);
}

TEST_CASE("Birkhoff and histogram kernels agree") {
  const auto phi = IntegerSymplecticMap::arnold_cat();
  auto rng = testing_support::seeded(61);
  std::vector<TorusPoint> points;
  for (int i = 0; i < 2000; ++i) points.emplace_back(testing_support::uniform(rng, 0, 1), testing_support::uniform(rng, 0, 1));
  for (int threads : {1, 3}) {
    ThreadCount guard(threads);
    const auto serial = kernels::birkhoff_batch_serial(phi, {2, -1}, std::span(points).first(16), 5000);
    const auto parallel = kernels::birkhoff_batch_parallel(phi, {2, -1}, std::span(points).first(16), 5000);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(bits_equal(serial[i].real(), parallel[i].real()));
      CHECK(bits_equal(serial[i].imag(), parallel[i].imag()));
    }
    const auto hs = kernels::lebesgue_histogram_serial(phi, points, 3, 8);
    CHECK(hs == kernels::lebesgue_histogram_parallel(phi, points, 3, 8));
    std::int64_t total = 0;
    for (auto c : hs) total += c;
    CHECK(total == 2000);
  }
  CHECK_THROWS_AS(kernels::lebesgue_histogram_parallel(phi, points, 1, 0), std::invalid_argument);
}

TEST_CASE("Sylvester sweep kernels agree and propagate errors") {
  auto rng = testing_support::seeded(62);
  std::vector<kernels::SylvesterCase> cases;
  for (int i = 0; i < 12; ++i) cases.push_back({random_unit_hermitian(2 + static_cast<std::size_t>(i % 5), rng), 0.25 * i});
  const auto serial = kernels::sylvester_batch_serial(cases);
  const auto parallel = kernels::sylvester_batch_parallel(cases);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    CHECK(serial[i].nullity == parallel[i].nullity);
    CHECK(bits_equal(serial[i].sigma_min, parallel[i].sigma_min));
  }
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = 1.0;
  cases.push_back({bad, 1.0});
  CHECK_THROWS_AS(kernels::sylvester_batch_parallel(cases), std::invalid_argument);
}

TEST_CASE("defect search kernels agree") {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
  h(1, 1) = 0.5;
  h(2, 2) = 2.0;
  SearchOptions opts;
  opts.trials = 8;
  opts.refine_steps = 10;
  opts.seed = 17;
  for (int threads : {1, 4}) {
    ThreadCount guard(threads);
    const auto serial = kernels::defect_search_serial(h, 0.5, opts);
    const auto parallel = kernels::defect_search_parallel(h, 0.5, opts);
    CHECK(bits_equal(serial.best_defect, parallel.best_defect));
    CHECK(serial.best_trial == parallel.best_trial);
    CHECK(serial.best_generator == parallel.best_generator);
  }
  opts.trials = 0;
  CHECK_THROWS_AS(kernels::defect_search_parallel(h, 0.5, opts), std::invalid_argument);
}
