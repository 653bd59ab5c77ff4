#include "anosov/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>
#include <lapacke.h>

#include "anosov/kernels.hpp"

namespace anosov {
namespace {

using Eigen::MatrixXcd;

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point per axis");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  return out;
}

// Q diag(exp(i theta_k)) Q*
MatrixXcd unitary_from_spectrum(const MatrixXcd& q, const Eigen::VectorXd& eig, double scale) {
  Eigen::VectorXcd phases(eig.size());
  for (Eigen::Index i = 0; i < eig.size(); ++i) phases[i] = std::polar(1.0, scale * eig[i]);
  return q * phases.asDiagonal() * q.adjoint();
}

}  // namespace

FiniteQuantumSystem::FiniteQuantumSystem(std::vector<double> levels, std::vector<double> weights)
    : levels_(std::move(levels)), weights_(std::move(weights)) {
  if (levels_.empty()) throw std::invalid_argument("system needs at least one level");
  if (levels_.size() != weights_.size()) throw std::invalid_argument("levels and weights differ in length");
  if (!std::all_of(levels_.begin(), levels_.end(), [](double e) { return std::isfinite(e); })) {
    throw std::invalid_argument("levels must be finite");
  }
  if (!std::is_sorted(levels_.begin(), levels_.end())) throw std::invalid_argument("levels must be ascending");
  if (!std::all_of(weights_.begin(), weights_.end(), [](double w) { return w >= 0.0; })) {
    throw std::invalid_argument("weights must be non-negative");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");
}

double FiniteQuantumSystem::bohr_frequency(std::size_t k, std::size_t l) const {
  return levels_.at(l) - levels_.at(k);
}

std::vector<double> GnsData::spectrum() const {
  std::vector<double> out;
  out.reserve(modes.size());
  for (const auto& m : modes) out.push_back(m.omega);
  std::sort(out.begin(), out.end());
  return out;
}

GnsData gns_build(const FiniteQuantumSystem& sys) {
  GnsData data;
  for (std::size_t l = 0; l < sys.size(); ++l) {
    if (sys.weights()[l] == 0.0) continue;
    for (std::size_t k = 0; k < sys.size(); ++k) data.modes.push_back({k, l, sys.bohr_frequency(k, l)});
  }
  if (data.modes.empty()) throw std::invalid_argument("stationary state has empty support");
  return data;
}

std::complex<double> heisenberg_phase(std::size_t k, std::size_t l, double t, const FiniteQuantumSystem& sys) {
  return std::polar(1.0, sys.bohr_frequency(k, l) * t);
}

MatrixXcd sylvester_superoperator(const MatrixXcd& h, double lambda) {
  const Eigen::Index n = h.rows();
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  const Eigen::Index n2 = n * n;
  MatrixXcd op(n2, n2);
  // vec(HG) = (I (x) H) vec(G), vec(GH) = (H^T (x) I) vec(G)
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      op.block(i * n, j * n, n, n) = id(i, j) * h - h(j, i) * id;
    }
  }
  op.diagonal().array() -= std::complex<double>(0.0, lambda);
  return op;
}

SylvesterResult sylvester_obstruction(const MatrixXcd& h, double lambda) {
  if (h.rows() == 0 || h.rows() != h.cols()) throw std::invalid_argument("H must be a non-empty square matrix");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("H must be Hermitian");
  const double h_norm = Eigen::SelfAdjointEigenSolver<MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().maxCoeff();
  // LAPACK zgesvd: Eigen's BDCSVD reports the exact zeros of degenerate-H
  // superoperators as large as 1e-4, and JacobiSVD is too slow at n = 12.
  MatrixXcd op = sylvester_superoperator(h, lambda);
  const auto dim = static_cast<lapack_int>(op.rows());
  Eigen::VectorXd sv(dim);
  std::vector<double> superb(static_cast<std::size_t>(dim));
  const lapack_int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', dim, dim,
                                         reinterpret_cast<lapack_complex_double*>(op.data()), dim, sv.data(), nullptr,
                                         1, nullptr, 1, superb.data());
  if (info != 0) throw std::runtime_error("zgesvd failed to converge (info " + std::to_string(info) + ")");
  SylvesterResult r;
  r.sigma_min = sv.minCoeff();
  r.nullity = static_cast<int>((sv.array() <= 1e-9 * h_norm).count());
  return r;
}

std::size_t commutant_dimension(const std::vector<double>& sorted, double tol) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] - sorted[j - 1] <= tol) ++j;
    total += (j - i) * (j - i);
    i = j;
  }
  return total;
}

MatrixXcd hermitian_with_spectrum(const std::vector<double>& spectrum, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(spectrum.size());
  std::normal_distribution<double> gauss;
  MatrixXcd a(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) a(r, c) = {gauss(rng), gauss(rng)};
  }
  Eigen::HouseholderQR<MatrixXcd> qr(a);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd& rr = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i) q.col(i) *= rr(i, i) / std::abs(rr(i, i));
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d[i] = spectrum[static_cast<std::size_t>(i)];
  MatrixXcd h = q * d.cast<std::complex<double>>().asDiagonal() * q.adjoint();
  return (h + h.adjoint()) * 0.5;
}

MatrixXcd random_unit_hermitian(std::size_t n, std::mt19937_64& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  std::normal_distribution<double> gauss;
  MatrixXcd a(m, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    for (Eigen::Index r = 0; r < m; ++r) a(r, c) = {gauss(rng), gauss(rng)};
  }
  MatrixXcd h = (a + a.adjoint()) * 0.5;
  return h / h.norm();
}

DefectGrid DefectGrid::refined() const {
  DefectGrid g = *this;
  g.s_points = 2 * s_points - 1;
  g.t_points = 2 * t_points - 1;
  return g;
}

double group_conjugation_defect(const MatrixXcd& h, const MatrixXcd& g, double lambda, const DefectGrid& grid) {
  // Work in the eigenbasis of H, where conjugation by e^{iHt} is the entrywise
  // phase e^{i(e_k - e_l)t}; the Frobenius norm does not see the change of basis.
  const Eigen::SelfAdjointEigenSolver<MatrixXcd> he(h);
  const Eigen::SelfAdjointEigenSolver<MatrixXcd> ge(g);
  const MatrixXcd w = he.eigenvectors().adjoint() * ge.eigenvectors();
  const Eigen::VectorXd& e = he.eigenvalues();
  const Eigen::Index n = h.rows();
  const auto ss = linspace(grid.s_min, grid.s_max, grid.s_points);
  const auto ts = linspace(grid.t_min, grid.t_max, grid.t_points);

  std::vector<MatrixXcd> shifts;
  shifts.reserve(ss.size());
  for (double s : ss) shifts.push_back(unitary_from_spectrum(w, ge.eigenvalues(), s));
  MatrixXcd phase(n, n), scaled(n, n), rhs(n, n);
  Eigen::VectorXcd rot(n);
  double worst = 0.0;
  for (double t : ts) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) phase(r, c) = std::polar(1.0, (e[r] - e[c]) * t);
    }
    const double rate = std::exp(lambda * t);
    for (std::size_t i = 0; i < ss.size(); ++i) {
      for (Eigen::Index k = 0; k < n; ++k) rot[k] = std::polar(1.0, ss[i] * rate * ge.eigenvalues()[k]);
      scaled.noalias() = w * rot.asDiagonal();
      rhs.noalias() = scaled * w.adjoint();
      worst = std::max(worst, (phase.cwiseProduct(shifts[i]) - rhs).norm());
    }
  }
  return worst;
}

SearchResult conjugation_defect_trial(const MatrixXcd& h, double lambda, const SearchOptions& opts, int trial) {
  std::seed_seq seq{opts.seed, static_cast<std::uint64_t>(trial)};
  std::mt19937_64 rng(seq);
  const auto n = static_cast<std::size_t>(h.rows());
  MatrixXcd g = random_unit_hermitian(n, rng);
  double best = group_conjugation_defect(h, g, lambda, opts.grid);
  double step = 0.5;
  for (int i = 0; i < opts.refine_steps; ++i) {
    MatrixXcd cand = g + step * random_unit_hermitian(n, rng);
    cand /= cand.norm();
    const double d = group_conjugation_defect(h, cand, lambda, opts.grid);
    if (d < best) {
      best = d;
      g = std::move(cand);
    } else {
      step *= 0.85;
    }
  }
  return {best, trial, g};
}

SearchResult conjugation_defect_search(const MatrixXcd& h, double lambda, const SearchOptions& opts) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("H must be Hermitian");
  return kernels::defect_search_parallel(h, lambda, opts);
}

std::string sylvester_records_json(const std::vector<SylvesterRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"n", r.n},
                   {"lambda", r.lambda},
                   {"nullity", r.result.nullity},
                   {"sigma_min", r.result.sigma_min},
                   {"seed", r.seed}});
  }
  return arr.dump(2);
}

}  // namespace anosov
