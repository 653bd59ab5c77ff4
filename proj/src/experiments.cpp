#include "anosov/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "anosov/affine.hpp"
#include "anosov/half_plane.hpp"
#include "anosov/kernels.hpp"
#include "anosov/nogo.hpp"
#include "anosov/torus.hpp"
#include "anosov/weyl.hpp"

namespace anosov {
namespace {

using Rng = std::mt19937_64;

std::string tag(const char* fmt, auto... args) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::vector<double> linspace(double lo, double hi, int n) {
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

std::vector<std::int64_t> integer_times(double lo, double hi) {
  std::vector<std::int64_t> out;
  for (auto t = static_cast<std::int64_t>(std::ceil(lo)); static_cast<double>(t) <= hi; ++t) out.push_back(t);
  if (out.empty()) throw std::invalid_argument("t range contains no integer time");
  return out;
}

struct Builder {
  const ExperimentConfig& cfg;
  ExperimentReport report;

  void add(std::string id, double t, double s, int j, double measured, double expected, double tol, bool pass) {
    report.records.push_back(make_case(cfg.experiment, std::move(id), t, s, j, measured, expected, tol, pass));
  }
  // measured within tol of expected
  void near(std::string id, double t, double s, int j, double measured, double expected, double tol) {
    add(std::move(id), t, s, j, measured, expected, tol, std::abs(measured - expected) <= tol);
  }
  // measured within tol * |expected| of expected
  void near_rel(std::string id, double t, double s, int j, double measured, double expected, double rel) {
    add(std::move(id), t, s, j, measured, expected, rel, std::abs(measured - expected) <= rel * std::abs(expected));
  }
  void at_least(std::string id, double t, double s, int j, double measured, double bound) {
    add(std::move(id), t, s, j, measured, bound, bound, measured >= bound);
  }
};

void cat_classical(Builder& b) {
  const auto& cfg = b.cfg;
  const auto phi = IntegerSymplecticMap::arnold_cat();
  const double tol_conj = cfg.tolerance("conjugation");
  const double tol_diff = cfg.tolerance("differential");
  Rng rng(cfg.seed);
  std::vector<TorusPoint> points;
  for (int p = 0; p < cfg.samples; ++p) points.emplace_back(uniform(rng, 0, 1), uniform(rng, 0, 1));
  const auto ss = linspace(cfg.s_min, cfg.s_max, cfg.samples);
  const auto ts = integer_times(cfg.t_min, cfg.t_max);

  for (int j = 1; j <= 2; ++j) {
    for (auto t : ts) {
      const double td = static_cast<double>(t);
      b.near(tag("diff:j%d:t%lld", j, static_cast<long long>(t)), td, 0.0, j, differential_check_cat(phi, j, t), 0.0,
             tol_diff);
      for (double s : ss) {
        for (std::size_t p = 0; p < points.size(); ++p) {
          b.near(tag("conj:j%d:t%lld:s%.6g:p%zu", j, static_cast<long long>(t), s, p), td, s, j,
                 conjugation_defect_cat(phi, j, t, s, points[p]), 0.0, tol_conj);
        }
      }
    }
  }
  // A non-invariant direction must show up in both forms of the condition.
  const double control = cfg.tolerance("control");
  const Vec2 wrong{1.0, 0.0};
  const double rate = eigen_system(phi).k1;
  b.at_least("control:diff", 1, 0.0, 1, differential_check_cat(phi, wrong, rate, 1), control);
  b.at_least("control:conj", 1, 0.1, 1, conjugation_defect_cat(phi, wrong, rate, 1, 0.1, points.front()), control);
}

void cat_divergence(Builder& b) {
  const auto& cfg = b.cfg;
  const auto phi = IntegerSymplecticMap::arnold_cat();
  const auto eig = eigen_system(phi);
  Rng rng(cfg.seed);
  const TorusPoint m(uniform(rng, 0, 1), uniform(rng, 0, 1));
  const double rel = cfg.tolerance("distance_rel");
  const double slope_tol = cfg.tolerance("slope");

  struct Run {
    int j;
    double eps;
    Vec2 coeffs;
    std::int64_t horizon;
  };
  const auto horizon = static_cast<std::int64_t>(std::floor(cfg.t_max));
  const Run runs[] = {{1, 1e-8, {1.0, 0.0}, horizon}, {2, 1e-3, {0.0, 1.0}, std::min<std::int64_t>(horizon, 10)}};
  for (const auto& r : runs) {
    const auto curve = separation_growth(phi, m, r.coeffs, r.eps, r.horizon);
    for (const auto& sample : curve) {
      b.near_rel(tag("dist:j%d:t%lld", r.j, static_cast<long long>(sample.t)), static_cast<double>(sample.t), r.eps,
                 r.j, sample.distance, r.eps * growth_factor(eig, r.j, sample.t), rel);
    }
    b.near(tag("slope:j%d", r.j), static_cast<double>(r.horizon), r.eps, r.j, fitted_log_slope(curve),
           eig.exponent(r.j), slope_tol);
  }
}

void cat_ergodic(Builder& b) {
  const auto& cfg = b.cfg;
  const auto phi = IntegerSymplecticMap::arnold_cat();
  constexpr std::int64_t kOrbit = 100000;
  Rng rng(cfg.seed);
  std::vector<TorusPoint> points;
  for (int p = 0; p < cfg.samples; ++p) points.emplace_back(uniform(rng, 0, 1), uniform(rng, 0, 1));

  const double bound = cfg.tolerance("bound_factor") / std::sqrt(static_cast<double>(kOrbit));
  const auto avgs = kernels::birkhoff_batch_parallel(phi, {1, 0}, points, kOrbit);
  for (std::size_t p = 0; p < avgs.size(); ++p) {
    b.add(tag("birkhoff:nu10:p%zu", p), static_cast<double>(kOrbit), 0.0, 0, std::abs(avgs[p]), 0.0, bound,
          std::abs(avgs[p]) <= bound);
  }
  const auto trivial = birkhoff_average(phi, {0, 0}, points.front(), kOrbit);
  b.near("birkhoff:nu00", static_cast<double>(kOrbit), 0.0, 0, std::abs(trivial), 1.0, 0.0);

  // Pushforward of uniform samples stays uniform: cell counts of phi^5 x.
  constexpr int kCells = 16;
  constexpr std::int64_t kPoints = 1000000, kTime = 5;
  std::vector<TorusPoint> cloud;
  cloud.reserve(kPoints);
  for (std::int64_t i = 0; i < kPoints; ++i) cloud.emplace_back(uniform(rng, 0, 1), uniform(rng, 0, 1));
  const auto counts = kernels::lebesgue_histogram_parallel(phi, cloud, kTime, kCells);
  const double mean = static_cast<double>(kPoints) / (kCells * kCells);
  double worst = 0.0;
  for (auto c : counts) worst = std::max(worst, std::abs(static_cast<double>(c) - mean));
  const double hist_bound = cfg.tolerance("histogram_sigma") * std::sqrt(mean);
  b.add("lebesgue:max_cell_deviation", static_cast<double>(kTime), 0.0, 0, worst, 0.0, hist_bound, worst <= hist_bound);
}

MoebiusMatrix random_group_element(Rng& rng) {
  return horocycle_matrix(1, uniform(rng, -2, 2)) * geodesic_matrix(uniform(rng, -3, 3)) *
         horocycle_matrix(2, uniform(rng, -2, 2));
}

void geodesic(Builder& b) {
  const auto& cfg = b.cfg;
  const double tol = cfg.tolerance("defect");
  const double tol_diff = cfg.tolerance("differential");
  const auto ts = linspace(cfg.t_min, cfg.t_max, cfg.samples);
  const auto ss = linspace(cfg.s_min, cfg.s_max, cfg.samples);
  Rng rng(cfg.seed);
  for (int j = 1; j <= 2; ++j) {
    for (double t : ts) {
      const double scale = 1.0 + std::exp(std::abs(t));
      for (double s : ss) {
        b.near(tag("conj:j%d:t%.6g:s%.6g", j, t, s), t, s, j, conjugation_defect_geodesic(j, t, s), 0.0, tol * scale);
      }
      const auto m = random_group_element(rng);
      b.near(tag("diff:j%d:t%.6g", j, t), t, 0.0, j, horocycle_differential_check(j, t, m, 1e-3), 0.0,
             tol_diff * scale);
    }
  }
  const double tol_inv = cfg.tolerance("invariance");
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_group_element(rng);
    const auto z1 = make_half_plane_point(uniform(rng, -2, 2), uniform(rng, 0.2, 3));
    const auto z2 = make_half_plane_point(uniform(rng, -2, 2), uniform(rng, 0.2, 3));
    const double before = hyperbolic_distance(z1, z2);
    const double after = hyperbolic_distance(moebius_apply(g, z1), moebius_apply(g, z2));
    b.near(tag("isometry:g%d", i), 0.0, 0.0, 0, after, before, tol_inv);
  }
}

// s values {-1, -0.5, 0.1, 0.5, 1} mapped affinely onto [s_min, s_max].
std::vector<double> quantum_s_values(const ExperimentConfig& cfg) {
  // mid + v * half is exact for the default range [-1, 1].
  const double mid = 0.5 * (cfg.s_min + cfg.s_max), half = 0.5 * (cfg.s_max - cfg.s_min);
  std::vector<double> out;
  for (double v : {-1.0, -0.5, 0.1, 0.5, 1.0}) out.push_back(mid + v * half);
  return out;
}

void cat_quantum(Builder& b) {
  const auto& cfg = b.cfg;
  const QuantumCat cat;
  const double gamma = default_gamma();
  const double tol = cfg.tolerance("defect");
  const auto ts = integer_times(cfg.t_min, cfg.t_max);
  const auto ss = quantum_s_values(cfg);
  Rng rng(cfg.seed);
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  for (int g = 0; g < cfg.samples; ++g) {
    const WeylIndex nu{coord(rng), coord(rng)};
    const auto a = WeylPolynomial::generator(gamma, nu);
    for (int j = 1; j <= 2; ++j) {
      for (auto t : ts) {
        const double td = static_cast<double>(t);
        const double bound = tol * std::exp(std::abs(cat.eigen().lambda1 * td));
        for (double s : ss) {
          b.near(tag("defect:nu%lld_%lld:j%d:t%lld:s%.6g", static_cast<long long>(nu[0]), static_cast<long long>(nu[1]),
                     j, static_cast<long long>(t), s),
                 td, s, j, cat.hyperbolicity_defect(a, j, t, s), 0.0, bound);
        }
      }
    }
  }
  // Dropping the e^{lambda t} rescaling must break the relation.
  const auto w53 = WeylPolynomial::generator(gamma, {5, 3});
  b.at_least("control:unit_rate", 2, 0.2, 1, cat.hyperbolicity_defect(w53, 1, 2, 0.2, 1.0), cfg.tolerance("control"));
}

WeylPolynomial random_element(Rng& rng, double gamma) {
  std::uniform_int_distribution<std::int64_t> coord(-5, 5);
  WeylTerms terms;
  for (int k = 0; k < 4; ++k) terms[{coord(rng), coord(rng)}] += Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return {gamma, std::move(terms)};
}

void quantum_divergence(Builder& b) {
  const auto& cfg = b.cfg;
  const QuantumCat cat;
  const double gamma = default_gamma();
  const double rel = cfg.tolerance("relative");
  const auto ts = integer_times(cfg.t_min, cfg.t_max);
  Rng rng(cfg.seed);
  for (int p = 0; p < cfg.samples; ++p) {
    const auto f1 = state_from_element(random_element(rng, gamma));
    const auto f2 = state_from_element(random_element(rng, gamma));
    for (int j = 1; j <= 2; ++j) {
      for (auto t : ts) {
        b.near_rel(tag("ratio:pair%d:j%d:t%lld", p, j, static_cast<long long>(t)), static_cast<double>(t), 0.0, j,
                   cat.divergence_ratio(f1, f2, j, t), cat.growth(j, t), rel);
      }
    }
  }
}

// Spectrum with a few well separated values (gaps >= 0.1) and random multiplicities.
std::vector<double> degenerate_spectrum(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> distinct_dist(1, n);
  const std::size_t distinct = distinct_dist(rng);
  std::vector<double> values(distinct);
  for (std::size_t k = 0; k < distinct; ++k) values[k] = 0.5 * static_cast<double>(k) + uniform(rng, 0.0, 0.4);
  std::uniform_int_distribution<std::size_t> pick(0, distinct - 1);
  std::vector<double> spec(n);
  for (auto& e : spec) e = values[pick(rng)];
  std::sort(spec.begin(), spec.end());
  return spec;
}

void nogo_sylvester(Builder& b) {
  const auto& cfg = b.cfg;
  constexpr double kLambdas[] = {0.25, 0.5, 1.0, 2.0};
  const double margin = cfg.tolerance("sigma_margin");

  std::vector<kernels::SylvesterCase> cases;
  std::vector<std::size_t> commutant;
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < cfg.samples; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 11);
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    std::seed_seq seq{seed};
    Rng rng(seq);
    std::vector<double> levels(n);
    for (auto& e : levels) e = uniform(rng, -1, 1);
    std::sort(levels.begin(), levels.end());
    cases.push_back({hermitian_with_spectrum(levels, rng), kLambdas[i % 4]});
    const auto spec = degenerate_spectrum(n, rng);
    cases.push_back({hermitian_with_spectrum(spec, rng), 0.0});
    commutant.push_back(commutant_dimension(spec, 1e-6));
    seeds.push_back(seed);
  }
  const auto results = kernels::sylvester_batch_parallel(cases);

  std::vector<SylvesterRecord> sylvester;
  for (int i = 0; i < cfg.samples; ++i) {
    const auto& hot = cases[2 * static_cast<std::size_t>(i)];
    const auto& zero = cases[2 * static_cast<std::size_t>(i) + 1];
    const auto& r = results[2 * static_cast<std::size_t>(i)];
    const auto& r0 = results[2 * static_cast<std::size_t>(i) + 1];
    const auto n = static_cast<double>(hot.h.rows());
    b.add(tag("nullity:c%d", i), n, hot.lambda, 0, r.nullity, 0.0, 0.0, r.nullity == 0);
    b.add(tag("sigma_min:c%d", i), n, hot.lambda, 0, r.sigma_min, hot.lambda, margin,
          r.sigma_min >= hot.lambda - margin);
    const auto dim = static_cast<double>(commutant[static_cast<std::size_t>(i)]);
    b.add(tag("commutant:c%d", i), n, 0.0, 0, r0.nullity, dim, 0.0, r0.nullity == dim);
    sylvester.push_back({static_cast<std::size_t>(hot.h.rows()), hot.lambda, r, seeds[static_cast<std::size_t>(i)]});
    sylvester.push_back({static_cast<std::size_t>(zero.h.rows()), 0.0, r0, seeds[static_cast<std::size_t>(i)]});
  }
  b.report.extra_key = "sylvester";
  b.report.extra_json = sylvester_records_json(sylvester);
}

void nogo_search(Builder& b) {
  const auto& cfg = b.cfg;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(1, 1) = 1.0;
  SearchOptions opts;
  opts.trials = cfg.samples;
  opts.seed = cfg.seed;
  opts.grid.s_min = cfg.s_min;
  opts.grid.s_max = cfg.s_max;
  opts.grid.t_min = cfg.t_min;
  opts.grid.t_max = cfg.t_max;
  const auto coarse = conjugation_defect_search(h, 1.0, opts);
  b.at_least("search:best_defect", 0.0, 1.0, 0, coarse.best_defect, cfg.tolerance("min_defect"));

  SearchOptions fine = opts;
  fine.grid = opts.grid.refined();
  const auto refined = conjugation_defect_search(h, 1.0, fine);
  const double keep = 1.0 - cfg.tolerance("stability");
  b.add("search:refined_grid", 0.0, 1.0, 0, refined.best_defect, coarse.best_defect, cfg.tolerance("stability"),
        refined.best_defect >= keep * coarse.best_defect);

  // lambda = 0 with G in the commutant of H satisfies the relation exactly.
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(2, 2);
  g(0, 0) = 1.0;
  b.near("control:commuting_lambda0", 0.0, 0.0, 0, group_conjugation_defect(h, g, 0.0, opts.grid), 0.0,
         cfg.tolerance("control"));
}

void nogo_affine(Builder& b) {
  const auto& cfg = b.cfg;
  const double tol = cfg.tolerance("identity");
  double previous = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const std::size_t res = std::size_t{256} << k;
    const double d = affine_control(res);
    if (k == 0) {
      b.add(tag("control:n%zu", res), 0.5, 0.3, 0, d, d, 0.0, std::isfinite(d));
    } else {
      b.add(tag("control:n%zu", res), 0.5, 0.3, 0, d, previous, 0.0, d < previous);
    }
    previous = d;
    b.near(tag("identity_s0:n%zu", res), 0.5, 0.0, 0, affine_defect(res, 0.0, 0.5), 0.0, tol);
    b.near(tag("identity_t0:n%zu", res), 0.0, 0.3, 0, affine_defect(res, 0.3, 0.0), 0.0, tol);
  }
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog{
      {"cat-classical", "phi^t theta_j(s) phi^-t = theta_j(s e^{lambda_j t}) and phi^t V_j = e^{lambda_j t} V_j on the torus"},
      {"cat-divergence", "|phi^t m - phi^t m'| = eps e^{lambda_j t} for m' - m = eps V_j"},
      {"cat-ergodic", "(1/N) sum_t W(nu)(phi^t m) -> delta_{nu,0} and phi preserves Lebesgue measure"},
      {"geodesic", "xi(-t) xi_j(s) xi(t) = xi_j(s e^{lambda_j t}) in SL(2,R), lambda_1 = 1, lambda_2 = -1; Moebius maps are isometries"},
      {"cat-quantum", "alpha_t sigma_j(s) alpha_-t = sigma_j(s e^{lambda_j t}) on the Weyl algebra"},
      {"quantum-divergence", "||delta_j* alpha_t* (F1 - F2)|| = e^{lambda_j t} ||delta_j* (F1 - F2)||"},
      {"nogo-sylvester", "[H, G] = i lambda G has no nonzero solution for Hermitian H and lambda != 0"},
      {"nogo-search", "e^{iHt} e^{isG} e^{-iHt} = e^{i s e^{lambda t} G} fails for every unit G when H has discrete spectrum"},
      {"nogo-affine", "U(t) V(s) U(-t) = V(s e^t) for dilations and translations on the line"},
  };
  return catalog;
}

double default_gamma() { return std::numbers::pi / 16.0; }

ExperimentReport run(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  Builder b{cfg, {}};
  b.report.experiment = cfg.experiment;
  for (const auto& info : suite_catalog()) {
    if (info.name == cfg.experiment) b.report.identity = info.identity;
  }
  const auto& e = cfg.experiment;
  if (e == "cat-classical") cat_classical(b);
  else if (e == "cat-divergence") cat_divergence(b);
  else if (e == "cat-ergodic") cat_ergodic(b);
  else if (e == "geodesic") geodesic(b);
  else if (e == "cat-quantum") cat_quantum(b);
  else if (e == "quantum-divergence") quantum_divergence(b);
  else if (e == "nogo-sylvester") nogo_sylvester(b);
  else if (e == "nogo-search") nogo_search(b);
  else if (e == "nogo-affine") nogo_affine(b);
  else throw std::invalid_argument("unknown experiment '" + e + "'");
  b.report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return b.report;
}

}  // namespace anosov
