#include "muskat/dno.hpp"

#include "muskat/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muskat {

DnoResult apply_dno(const GridFunction& f, const GridFunction& g) {
  f.check_finite();
  g.check_finite();
  if (!(f.grid == g.grid)) throw std::invalid_argument("apply_dno: grid mismatch");
  const std::size_t n = f.size();
  const double dx = f.grid.spacing();

  DensitySolution sol = solve_theta(f, dft_derivative(g));
  const GridFunction& theta = sol.theta;

  ProfileSamples p(f);
  GridFunction quad(f.grid);
  const double c = dx / (4.0 * std::numbers::pi);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += smooth_log_integrand(p, i, j).value * theta[j];
    }
    quad[i] = c * s;
    if (!std::isfinite(quad[i])) {
      throw std::runtime_error("apply_dno: non-finite quadrature value (log-split stage)");
    }
  }

  GridFunction gf = dft_derivative(quad) + 0.5 * hilbert_transform(theta);
  double pairing = 0.0;
  for (std::size_t i = 0; i < n; ++i) pairing += g[i] * gf[i];
  pairing *= dx;
  return {std::move(gf), std::move(sol), pairing};
}

GridFunction dno_flat(const GridFunction& g) { return abs_derivative(g); }

bool dno_vertical_shift_invariance(const GridFunction& f, const GridFunction& g,
                                   double c, double tol) {
  if (!std::isfinite(c)) throw std::invalid_argument("shift must be finite");
  DnoResult base = apply_dno(f, g);
  DnoResult shifted = apply_dno(f + c, g + c);
  return max_abs_diff(base.gf, shifted.gf) <= tol;
}

}  // namespace muskat
