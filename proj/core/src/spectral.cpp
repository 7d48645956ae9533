#include "muskat/spectral.hpp"

#include <fftw3.h>

#include <complex>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace muskat {

namespace {

// FFTW's planner is not thread-safe; execution of independent plans is.
std::mutex planner_mutex;

/// Apply a Fourier multiplier m(k), k = 0..n/2, in one r2c/c2r pair.
GridFunction apply_multiplier(const GridFunction& u,
                              const std::function<std::complex<double>(std::size_t)>& m) {
  u.check_finite();
  const std::size_t n = u.size();
  std::vector<double> in(u.values);
  std::vector<std::complex<double>> freq(n / 2 + 1);
  GridFunction out(u.grid);

  fftw_plan fwd, bwd;
  {
    std::scoped_lock lock(planner_mutex);
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                               reinterpret_cast<fftw_complex*>(freq.data()), FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                               reinterpret_cast<fftw_complex*>(freq.data()),
                               out.values.data(), FFTW_ESTIMATE);
  }
  fftw_execute(fwd);
  for (std::size_t k = 0; k <= n / 2; ++k) freq[k] *= m(k);
  fftw_execute(bwd);
  {
    std::scoped_lock lock(planner_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out.values) v *= scale;
  return out;
}

}  // namespace

GridFunction dft_derivative(const GridFunction& u) {
  const std::size_t nyq = u.size() / 2;
  return apply_multiplier(u, [nyq](std::size_t k) -> std::complex<double> {
    if (k == nyq) return 0.0;
    return {0.0, static_cast<double>(k)};
  });
}

GridFunction hilbert_transform(const GridFunction& u) {
  const std::size_t nyq = u.size() / 2;
  return apply_multiplier(u, [nyq](std::size_t k) -> std::complex<double> {
    if (k == 0 || k == nyq) return 0.0;
    return {0.0, -1.0};
  });
}

GridFunction abs_derivative(const GridFunction& u) {
  const std::size_t nyq = u.size() / 2;
  return apply_multiplier(u, [nyq](std::size_t k) -> std::complex<double> {
    if (k == nyq) return 0.0;
    return static_cast<double>(k);
  });
}

GridFunction heat_factor(const GridFunction& u, double nu) {
  if (!(nu >= 0.0)) throw std::invalid_argument("heat_factor: nu must be >= 0");
  return apply_multiplier(u, [nu](std::size_t k) -> std::complex<double> {
    const double kk = static_cast<double>(k);
    return std::exp(-nu * kk * kk);
  });
}

GridFunction mollify(const GridFunction& u, double width) {
  if (!(width >= 0.0)) throw std::invalid_argument("mollify: width must be >= 0");
  return heat_factor(u, 0.5 * width * width);
}

GridFunction dealias_two_thirds(const GridFunction& u) {
  const std::size_t cut = u.size() / 3;
  return apply_multiplier(u, [cut](std::size_t k) -> std::complex<double> {
    return k > cut ? 0.0 : 1.0;
  });
}

}  // namespace muskat
