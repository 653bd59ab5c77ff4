#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version; the two produce bit-identical results (per-item work is the
// same code, and every floating-point reduction runs in the serial order).

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "anosov/nogo.hpp"
#include "anosov/torus.hpp"
#include "anosov/weyl.hpp"

namespace anosov::kernels {

WeylPolynomial weyl_mul_serial(const WeylPolynomial& a, const WeylPolynomial& b);
WeylPolynomial weyl_mul_parallel(const WeylPolynomial& a, const WeylPolynomial& b);

/// Birkhoff averages of W(nu) along the orbit of each starting point.
std::vector<std::complex<double>> birkhoff_batch_serial(const IntegerSymplecticMap& phi, const Lattice2& nu,
                                                        std::span<const TorusPoint> points, std::int64_t n);
std::vector<std::complex<double>> birkhoff_batch_parallel(const IntegerSymplecticMap& phi, const Lattice2& nu,
                                                          std::span<const TorusPoint> points, std::int64_t n);

/// Row-major cells x cells counts of phi^t applied to each point.
std::vector<std::int64_t> lebesgue_histogram_serial(const IntegerSymplecticMap& phi,
                                                    std::span<const TorusPoint> points, std::int64_t t, int cells);
std::vector<std::int64_t> lebesgue_histogram_parallel(const IntegerSymplecticMap& phi,
                                                      std::span<const TorusPoint> points, std::int64_t t, int cells);

struct SylvesterCase {
  Eigen::MatrixXcd h;
  double lambda;
};

std::vector<SylvesterResult> sylvester_batch_serial(std::span<const SylvesterCase> cases);
std::vector<SylvesterResult> sylvester_batch_parallel(std::span<const SylvesterCase> cases);

/// Minimum over seeded trials; ties go to the lowest trial index.
SearchResult defect_search_serial(const Eigen::MatrixXcd& h, double lambda, const SearchOptions& opts);
SearchResult defect_search_parallel(const Eigen::MatrixXcd& h, double lambda, const SearchOptions& opts);

}  // namespace anosov::kernels
