#pragma once

// Finite-spectrum quantum systems: the GNS Hamiltonian's Bohr-frequency
// spectrum and two numerical witnesses that no hyperbolic horocycle can act
// on them.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace anosov {

/// Levels e_0 <= ... <= e_{n-1} with stationary weights w_r >= 0, sum 1.
class FiniteQuantumSystem {
 public:
  /// Throws std::invalid_argument on empty, unsorted or non-finite levels,
  /// negative weights, a size mismatch, or weights not summing to 1 within 1e-12.
  FiniteQuantumSystem(std::vector<double> levels, std::vector<double> weights);

  std::size_t size() const { return levels_.size(); }
  const std::vector<double>& levels() const { return levels_; }
  const std::vector<double>& weights() const { return weights_; }

  /// omega_kl = e_l - e_k
  double bohr_frequency(std::size_t k, std::size_t l) const;

 private:
  std::vector<double> levels_;
  std::vector<double> weights_;
};

/// Matrix unit F_kl, 0-based, kept in the GNS basis iff w_l > 0.
struct GnsMode {
  std::size_t k;
  std::size_t l;
  double omega;
};

struct GnsData {
  std::vector<GnsMode> modes;

  /// Eigenvalues of the GNS Hamiltonian with multiplicity, ascending.
  std::vector<double> spectrum() const;
};

/// Throws std::invalid_argument if every weight is zero.
GnsData gns_build(const FiniteQuantumSystem& sys);

/// exp(i omega_kl t). Throws std::out_of_range on a bad index.
std::complex<double> heisenberg_phase(std::size_t k, std::size_t l, double t, const FiniteQuantumSystem& sys);

/// The superoperator G -> HG - GH - i lambda G on column-major vec(G).
Eigen::MatrixXcd sylvester_superoperator(const Eigen::MatrixXcd& h, double lambda);

struct SylvesterResult {
  int nullity = 0;
  double sigma_min = 0.0;
};

/// Null-space dimension (singular values <= 1e-9 ||H||_2) and smallest
/// singular value of the superoperator. Throws std::invalid_argument if H is
/// not square or not Hermitian to 1e-12.
SylvesterResult sylvester_obstruction(const Eigen::MatrixXcd& h, double lambda);

/// sum of squared multiplicities, eigenvalues closer than tol counted equal.
std::size_t commutant_dimension(const std::vector<double>& sorted_eigenvalues, double tol);

/// Random unitary (QR of a complex Gaussian matrix, phases fixed) conjugating diag(spectrum).
Eigen::MatrixXcd hermitian_with_spectrum(const std::vector<double>& spectrum, std::mt19937_64& rng);

/// Hermitian matrix with i.i.d. Gaussian entries, unit Frobenius norm.
Eigen::MatrixXcd random_unit_hermitian(std::size_t n, std::mt19937_64& rng);

struct DefectGrid {
  double s_min = -1.0;
  double s_max = 1.0;
  double t_min = -2.0;
  double t_max = 2.0;
  int s_points = 21;
  int t_points = 21;

  DefectGrid refined() const;
};

/// max over the grid of ||e^{iHt} e^{isG} e^{-iHt} - e^{i s e^{lambda t} G}||_F.
double group_conjugation_defect(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& g, double lambda,
                                const DefectGrid& grid);

struct SearchOptions {
  int trials = 200;
  int refine_steps = 60;
  DefectGrid grid;
  std::uint64_t seed = 1;
};

struct SearchResult {
  double best_defect = 0.0;
  int best_trial = -1;
  Eigen::MatrixXcd best_generator;
};

/// One seeded trial: random unit Hermitian start, then a shrinking-step
/// random local search on the unit sphere.
SearchResult conjugation_defect_trial(const Eigen::MatrixXcd& h, double lambda, const SearchOptions& opts, int trial);

/// Best defect over all trials, run in parallel; identical to the serial sweep.
SearchResult conjugation_defect_search(const Eigen::MatrixXcd& h, double lambda, const SearchOptions& opts);

struct SylvesterRecord {
  std::size_t n;
  double lambda;
  SylvesterResult result;
  std::uint64_t seed;
};

/// JSON array of {n, lambda, nullity, sigma_min, seed}.
std::string sylvester_records_json(const std::vector<SylvesterRecord>& records);

}  // namespace anosov
