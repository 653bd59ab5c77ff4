#pragma once

// Translation and dilation groups on a uniform periodic grid over [-L, L).
// Both are exponentials of spectrally discretized generators, so each family
// is an exact one-parameter unitary group on the grid; only their mutual
// commutation relation carries discretization error.

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace anosov {

class AffinePair {
 public:
  /// Throws std::invalid_argument unless resolution is even and >= 4.
  AffinePair(std::size_t resolution, double half_width);
  ~AffinePair();
  AffinePair(const AffinePair&) = delete;
  AffinePair& operator=(const AffinePair&) = delete;

  std::size_t size() const { return x_.size(); }
  const std::vector<double>& grid() const { return x_; }

  /// exp(-i s P) f, i.e. f(x - s), with P = -i d/dx applied spectrally.
  std::vector<std::complex<double>> translate(std::span<const std::complex<double>> f, double s) const;

  /// exp(-i t D) f, i.e. e^{-t/2} f(e^{-t} x), with D = (XP + PX)/2.
  std::vector<std::complex<double>> dilate(std::span<const std::complex<double>> f, double t) const;

  /// D f
  std::vector<std::complex<double>> dilation_generator(std::span<const std::complex<double>> f) const;

  /// Upper bound on the spectral radius of D used by the Chebyshev expansion.
  double generator_bound() const { return bound_; }

 private:
  struct Fft;
  std::vector<double> x_;
  std::vector<double> k_;
  double bound_;
  std::unique_ptr<Fft> fft_;
};

struct AffineOptions {
  double half_width = 16.0;
  double gaussian_width = 0.05;  ///< standard deviation of the test vector
};

/// ||U(t) V(s) U(-t) f - V(s e^t) f|| / ||f|| for the Gaussian test vector.
double affine_defect(std::size_t resolution, double s, double t, const AffineOptions& opts = {});

/// affine_defect at (s, t) = (0.3, 0.5). Throws std::invalid_argument unless
/// resolution is a power of two and at least 256.
double affine_control(std::size_t resolution, const AffineOptions& opts = {});

}  // namespace anosov
