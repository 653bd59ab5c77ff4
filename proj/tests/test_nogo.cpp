#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "anosov/nogo.hpp"
#include "support.hpp"

using namespace anosov;
using Eigen::MatrixXcd;

namespace {

MatrixXcd diag01() {
  MatrixXcd h = MatrixXcd::Zero(2, 2);
  h(1, 1) = 1.0;
  return h;
}

// vec(H G - G H - i lambda G), column-major, straight from the definition.
Eigen::VectorXcd apply_definition(const MatrixXcd& h, const MatrixXcd& g, double lambda) {
  const MatrixXcd out = h * g - g * h - std::complex<double>(0, lambda) * g;
  return Eigen::Map<const Eigen::VectorXcd>(out.data(), out.size());
}

}  // namespace

TEST_CASE("finite systems validate their data") {
  CHECK_THROWS_AS(FiniteQuantumSystem({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteQuantumSystem({1.0, 0.0}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteQuantumSystem({0.0, 1.0}, {0.7, 0.7}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteQuantumSystem({0.0, 1.0}, {1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteQuantumSystem({0.0, 1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteQuantumSystem({0.0, INFINITY}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteQuantumSystem({0.0}, {0.0}), std::invalid_argument);
}

TEST_CASE("GNS spectrum from Bohr frequencies") {
  const auto full = gns_build(FiniteQuantumSystem({0.0, 1.0}, {0.5, 0.5}));
  CHECK(full.spectrum() == std::vector<double>{-1.0, 0.0, 0.0, 1.0});

  const auto pure = gns_build(FiniteQuantumSystem({0.0, 1.0}, {1.0, 0.0}));
  REQUIRE(pure.modes.size() == 2);
  for (const auto& m : pure.modes) CHECK(m.l == 0);
  CHECK(pure.spectrum() == std::vector<double>{-1.0, 0.0});

  CHECK(gns_build(FiniteQuantumSystem({3.0}, {1.0})).spectrum() == std::vector<double>{0.0});

  auto rng = testing_support::seeded(40);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(testing_support::uniform_int(rng, 1, 9));
    std::vector<double> levels(n), weights(n);
    for (std::size_t k = 0; k < n; ++k) levels[k] = static_cast<double>(k * (k + 1));
    double total = 0.0;
    for (auto& w : weights) total += (w = testing_support::uniform(rng, 0.1, 1.0));
    for (auto& w : weights) w /= total;
    weights.back() = 1.0 - std::accumulate(weights.begin(), weights.end() - 1, 0.0);
    const FiniteQuantumSystem sys(levels, weights);
    const auto gns = gns_build(sys);
    CHECK(gns.modes.size() == n * n);
    for (const auto& m : gns.modes) CHECK(m.omega == levels[m.l] - levels[m.k]);
    auto spec = gns.spectrum();
    auto negated = spec;
    for (auto& x : negated) x = -x;
    std::sort(negated.begin(), negated.end());
    CHECK(spec == negated);
    CHECK(std::count(spec.begin(), spec.end(), 0.0) >= static_cast<std::ptrdiff_t>(n));
  }
}

TEST_CASE("Heisenberg phases") {
  const FiniteQuantumSystem sys({0.0, 1.0, 2.5}, {0.2, 0.3, 0.5});
  CHECK(heisenberg_phase(1, 1, 7.3, sys) == std::complex<double>(1.0));
  CHECK(std::abs(heisenberg_phase(0, 1, std::numbers::pi, sys) + 1.0) < 1e-15);
  CHECK(std::abs(std::conj(heisenberg_phase(0, 2, 0.9, sys)) - heisenberg_phase(2, 0, 0.9, sys)) < 1e-15);
  for (double t1 : {-1.0, 0.3, 2.0}) {
    for (double t2 : {-0.7, 1.1}) {
      const auto product = heisenberg_phase(0, 2, t1, sys) * heisenberg_phase(0, 2, t2, sys);
      CHECK(std::abs(product - heisenberg_phase(0, 2, t1 + t2, sys)) < 1e-14);
      CHECK(std::abs(std::abs(heisenberg_phase(1, 2, t1, sys)) - 1.0) < 1e-15);
    }
  }
  CHECK_THROWS_AS(heisenberg_phase(0, 3, 1.0, sys), std::out_of_range);
}

TEST_CASE("Sylvester superoperator acts as G -> HG - GH - i lambda G") {
  auto rng = testing_support::seeded(41);
  for (int i = 0; i < 10; ++i) {
    const auto n = static_cast<std::size_t>(testing_support::uniform_int(rng, 1, 6));
    const MatrixXcd h = random_unit_hermitian(n, rng);
    const MatrixXcd g = MatrixXcd::Random(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const Eigen::VectorXcd vec_g = Eigen::Map<const Eigen::VectorXcd>(g.data(), g.size());
    CHECK((sylvester_superoperator(h, 0.7) * vec_g - apply_definition(h, g, 0.7)).norm() < 1e-13);
  }
}

TEST_CASE("no nonzero solution of [H, G] = i lambda G") {
  const auto one = sylvester_obstruction(diag01(), 1.0);
  CHECK(one.nullity == 0);
  CHECK(one.sigma_min == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sylvester_obstruction(diag01(), 0.0).nullity == 2);

  auto rng = testing_support::seeded(42);
  std::vector<double> levels(8);
  for (auto& e : levels) e = testing_support::uniform(rng, -2, 2);
  std::sort(levels.begin(), levels.end());
  const auto r = sylvester_obstruction(hermitian_with_spectrum(levels, rng), 0.5);
  CHECK(r.nullity == 0);
  CHECK(r.sigma_min >= 0.5 - 1e-9);

  MatrixXcd bad = MatrixXcd::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(sylvester_obstruction(bad, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sylvester_obstruction(MatrixXcd::Zero(2, 3), 1.0), std::invalid_argument);
}

TEST_CASE("zero-lambda nullity is the commutant dimension") {
  CHECK(commutant_dimension({0.0, 0.0, 1.0}, 1e-9) == 5);
  CHECK(commutant_dimension({1.0, 2.0, 3.0}, 1e-9) == 3);
  CHECK(commutant_dimension({0.5, 0.5, 0.5, 0.5}, 1e-9) == 16);
  auto rng = testing_support::seeded(43);
  for (int i = 0; i < 30; ++i) {
    const auto n = static_cast<std::size_t>(testing_support::uniform_int(rng, 2, 10));
    const auto distinct = testing_support::uniform_int(rng, 1, static_cast<std::int64_t>(n));
    std::vector<double> spec(n);
    for (auto& e : spec) e = 0.3 * static_cast<double>(testing_support::uniform_int(rng, 0, distinct - 1));
    std::sort(spec.begin(), spec.end());
    const MatrixXcd h = hermitian_with_spectrum(spec, rng);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(es.eigenvalues()[static_cast<Eigen::Index>(k)] - spec[k]) < 1e-13);
    CHECK(static_cast<std::size_t>(sylvester_obstruction(h, 0.0).nullity) == commutant_dimension(spec, 1e-6));
  }
}

TEST_CASE("random Hermitian generators") {
  auto rng = testing_support::seeded(44);
  const MatrixXcd g = random_unit_hermitian(4, rng);
  CHECK(g.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("group-level conjugation defect") {
  const MatrixXcd h = diag01();
  MatrixXcd commuting = MatrixXcd::Zero(2, 2);
  commuting(0, 0) = 1.0;
  CHECK(group_conjugation_defect(h, commuting, 0.0, {}) <= 1e-14);
  // With lambda != 0 even a commuting G fails: e^{isG} vs e^{i s e^{lambda t} G}.
  CHECK(group_conjugation_defect(h, commuting, 1.0, {}) > 0.5);

  const DefectGrid grid;
  const auto fine = grid.refined();
  CHECK(fine.s_points == 41);
  CHECK(fine.t_points == 41);
  CHECK(fine.s_min == grid.s_min);
  CHECK(fine.t_max == grid.t_max);
}

TEST_CASE("defect search stays bounded away from zero") {
  SearchOptions opts;
  opts.trials = 24;
  opts.refine_steps = 30;
  const auto coarse = conjugation_defect_search(diag01(), 1.0, opts);
  CHECK(coarse.best_defect >= 0.05);
  CHECK(coarse.best_trial >= 0);
  CHECK(coarse.best_generator.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(group_conjugation_defect(diag01(), coarse.best_generator, 1.0, opts.grid) == coarse.best_defect);

  SearchOptions fine = opts;
  fine.grid = opts.grid.refined();
  CHECK(conjugation_defect_search(diag01(), 1.0, fine).best_defect >= 0.9 * coarse.best_defect);

  // Same seed, same answer; the trial itself is reproducible.
  const auto again = conjugation_defect_search(diag01(), 1.0, opts);
  CHECK(again.best_defect == coarse.best_defect);
  CHECK(conjugation_defect_trial(diag01(), 1.0, opts, coarse.best_trial).best_defect == coarse.best_defect);
}

TEST_CASE("Sylvester records serialize as JSON") {
  const std::vector<SylvesterRecord> records{{2, 1.0, {0, 1.0}, 7}, {3, 0.0, {3, 0.0}, 8}};
  const auto parsed = nlohmann::json::parse(sylvester_records_json(records));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["n"] == 2);
  CHECK(parsed[0]["lambda"] == 1.0);
  CHECK(parsed[1]["nullity"] == 3);
  CHECK(parsed[1]["seed"] == 8);
  CHECK(parsed[0]["sigma_min"] == 1.0);
}
