#include "anosov/affine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>
#include <fftw3.h>

namespace anosov {

using cplx = std::complex<double>;

struct AffinePair::Fft {
  explicit Fft(std::size_t n) : n(n) {
    buf = reinterpret_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (buf == nullptr) throw std::bad_alloc();
    const int ni = static_cast<int>(n);
    forward = fftw_plan_dft_1d(ni, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_dft_1d(ni, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Fft() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(buf);
  }
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  // out = IFFT(multiplier * FFT(in)), normalized.
  template <typename Multiplier>
  void filter(std::span<const cplx> in, std::span<cplx> out, Multiplier&& mult) {
    auto* data = reinterpret_cast<cplx*>(buf);
    std::copy(in.begin(), in.end(), data);
    fftw_execute(forward);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t m = 0; m < n; ++m) data[m] *= mult(m) * scale;
    fftw_execute(backward);
    std::copy(data, data + n, out.begin());
  }

  std::size_t n;
  fftw_complex* buf;
  fftw_plan forward;
  fftw_plan backward;
};

AffinePair::AffinePair(std::size_t resolution, double half_width) {
  if (resolution < 4 || resolution % 2 != 0) throw std::invalid_argument("grid resolution must be even and >= 4");
  if (!(half_width > 0.0)) throw std::invalid_argument("grid half-width must be positive");
  const std::size_t n = resolution;
  const double dx = 2.0 * half_width / static_cast<double>(n);
  x_.resize(n);
  k_.resize(n);
  for (std::size_t i = 0; i < n; ++i) x_[i] = -half_width + dx * static_cast<double>(i);
  const double dk = std::numbers::pi / half_width;
  for (std::size_t m = 0; m < n; ++m) {
    const auto mi = static_cast<double>(m);
    const auto nd = static_cast<double>(n);
    // The Nyquist mode has no consistent sign; dropping it keeps P Hermitian.
    k_[m] = m < n / 2 ? dk * mi : (m == n / 2 ? 0.0 : dk * (mi - nd));
  }
  const double k_max = dk * static_cast<double>(n / 2 - 1);
  bound_ = 1.0001 * half_width * k_max;
  fft_ = std::make_unique<Fft>(n);
}

AffinePair::~AffinePair() = default;

std::vector<cplx> AffinePair::translate(std::span<const cplx> f, double s) const {
  if (f.size() != size()) throw std::invalid_argument("vector does not match grid");
  std::vector<cplx> out(size());
  fft_->filter(f, out, [&](std::size_t m) { return std::polar(1.0, -k_[m] * s); });
  return out;
}

std::vector<cplx> AffinePair::dilation_generator(std::span<const cplx> f) const {
  if (f.size() != size()) throw std::invalid_argument("vector does not match grid");
  const std::size_t n = size();
  std::vector<cplx> pf(n), xf(n), pxf(n);
  auto p_symbol = [&](std::size_t m) { return cplx(k_[m], 0.0); };
  fft_->filter(f, pf, p_symbol);
  for (std::size_t i = 0; i < n; ++i) xf[i] = x_[i] * f[i];
  fft_->filter(xf, pxf, p_symbol);
  for (std::size_t i = 0; i < n; ++i) pf[i] = 0.5 * (x_[i] * pf[i] + pxf[i]);
  return pf;
}

std::vector<cplx> AffinePair::dilate(std::span<const cplx> f, double t) const {
  if (f.size() != size()) throw std::invalid_argument("vector does not match grid");
  // exp(-i t D) = sum_m (2 - delta_m0) (-i)^m J_m(t rho) T_m(D / rho)
  const double z = std::abs(t) * bound_;
  const double sign = t < 0.0 ? -1.0 : 1.0;
  const auto terms = static_cast<std::size_t>(std::ceil(z + 10.0 * std::cbrt(z) + 40.0));
  const std::size_t n = size();

  std::vector<cplx> out(f.begin(), f.end());
  const double j0 = boost::math::cyl_bessel_j(0, z);
  for (auto& v : out) v *= j0;
  if (z == 0.0) return out;

  std::vector<cplx> prev(f.begin(), f.end());
  std::vector<cplx> cur = dilation_generator(f);
  for (auto& v : cur) v /= bound_;
  cplx phase(0.0, -sign);  // (-i)^m with J_m(-z) = (-1)^m J_m(z) folded in
  for (std::size_t m = 1; m <= terms; ++m) {
    const cplx coeff = 2.0 * phase * boost::math::cyl_bessel_j(static_cast<int>(m), z);
    for (std::size_t i = 0; i < n; ++i) out[i] += coeff * cur[i];
    if (m == terms) break;
    std::vector<cplx> next = dilation_generator(cur);
    for (std::size_t i = 0; i < n; ++i) next[i] = 2.0 * next[i] / bound_ - prev[i];
    prev = std::move(cur);
    cur = std::move(next);
    phase *= cplx(0.0, -sign);
  }
  return out;
}

double affine_defect(std::size_t resolution, double s, double t, const AffineOptions& opts) {
  const AffinePair pair(resolution, opts.half_width);
  std::vector<cplx> f(resolution);
  const double w2 = 2.0 * opts.gaussian_width * opts.gaussian_width;
  for (std::size_t i = 0; i < resolution; ++i) f[i] = std::exp(-pair.grid()[i] * pair.grid()[i] / w2);

  const auto lhs = pair.dilate(pair.translate(pair.dilate(f, -t), s), t);
  const auto rhs = pair.translate(f, s * std::exp(t));
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < resolution; ++i) {
    num += std::norm(lhs[i] - rhs[i]);
    den += std::norm(f[i]);
  }
  return std::sqrt(num / den);
}

double affine_control(std::size_t resolution, const AffineOptions& opts) {
  if (resolution < 256 || (resolution & (resolution - 1)) != 0) {
    throw std::invalid_argument("affine control resolution must be a power of two >= 256");
  }
  return affine_defect(resolution, 0.3, 0.5, opts);
}

}  // namespace anosov
