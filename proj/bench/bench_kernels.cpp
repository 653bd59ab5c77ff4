// Serial reference vs OpenMP kernels on desk-scale inputs.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "anosov/kernels.hpp"

using namespace anosov;

namespace {

WeylPolynomial random_polynomial(std::mt19937_64& rng, int support, std::int64_t max_index) {
  std::uniform_int_distribution<std::int64_t> coord(-max_index, max_index);
  std::uniform_real_distribution<double> unit(-1, 1);
  WeylTerms terms;
  while (static_cast<int>(terms.size()) < support) terms[{coord(rng), coord(rng)}] = Complex(unit(rng), unit(rng));
  return {std::numbers::pi / 16, std::move(terms)};
}

std::vector<TorusPoint> random_points(std::size_t n) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0, 1);
  std::vector<TorusPoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(unit(rng), unit(rng));
  return pts;
}

template <auto Kernel>
void weyl_product(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = random_polynomial(rng, static_cast<int>(state.range(0)), 60);
  const auto b = random_polynomial(rng, static_cast<int>(state.range(0)), 60);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

template <auto Kernel>
void birkhoff(benchmark::State& state) {
  const auto phi = IntegerSymplecticMap::arnold_cat();
  const auto pts = random_points(16);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(phi, {1, 0}, pts, state.range(0)));
}

template <auto Kernel>
void histogram(benchmark::State& state) {
  const auto phi = IntegerSymplecticMap::arnold_cat();
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(phi, pts, 5, 16));
}

template <auto Kernel>
void sylvester(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<kernels::SylvesterCase> cases;
  for (int i = 0; i < 40; ++i) cases.push_back({random_unit_hermitian(2 + static_cast<std::size_t>(i % 11), rng), 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cases));
}

template <auto Kernel>
void defect_search(benchmark::State& state) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(1, 1) = 1.0;
  SearchOptions opts;
  opts.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h, 1.0, opts));
}

}  // namespace

BENCHMARK(weyl_product<kernels::weyl_mul_serial>)->Name("weyl_product/serial")->Arg(50)->Arg(400);
BENCHMARK(weyl_product<kernels::weyl_mul_parallel>)->Name("weyl_product/omp")->Arg(50)->Arg(400);
BENCHMARK(birkhoff<kernels::birkhoff_batch_serial>)->Name("birkhoff/serial")->Arg(100000);
BENCHMARK(birkhoff<kernels::birkhoff_batch_parallel>)->Name("birkhoff/omp")->Arg(100000);
BENCHMARK(histogram<kernels::lebesgue_histogram_serial>)->Name("histogram/serial")->Arg(1000000);
BENCHMARK(histogram<kernels::lebesgue_histogram_parallel>)->Name("histogram/omp")->Arg(1000000);
BENCHMARK(sylvester<kernels::sylvester_batch_serial>)->Name("sylvester/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(sylvester<kernels::sylvester_batch_parallel>)->Name("sylvester/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(defect_search<kernels::defect_search_serial>)->Name("defect_search/serial")->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(defect_search<kernels::defect_search_parallel>)->Name("defect_search/omp")->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
