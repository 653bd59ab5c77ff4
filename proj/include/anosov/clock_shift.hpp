#pragma once

// Clock-and-shift matrices: an N-dimensional representation of the Weyl
// relations at gamma = pi / N, used as an independent check of the abstract
// product rule.

#include <complex>

#include <Eigen/Dense>

#include "anosov/weyl.hpp"

namespace anosov {

/// exp(-i pi nu1 nu2 / N) U^nu1 V^nu2 with U = diag(omega^k), V e_k = e_{k+1},
/// omega = exp(2 pi i / N). Satisfies rep(nu) rep(nu') =
/// exp(i (pi/N) k(nu, nu')) rep(nu + nu') for all integer indices.
/// Throws std::invalid_argument if N < 2.
Eigen::MatrixXcd finite_dim_rep(const WeylIndex& nu, int n);

/// The gamma at which finite_dim_rep(., n) represents the Weyl relations.
double clock_shift_gamma(int n);

/// tr(rep(nu)) / N. Equals delta_{nu,0} inside the window |nu_i| < N/2; throws
/// std::invalid_argument outside it.
std::complex<double> normalized_trace(const WeylIndex& nu, int n);

}  // namespace anosov
