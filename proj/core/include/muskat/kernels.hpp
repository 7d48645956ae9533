#pragma once

#include "muskat/grid.hpp"

namespace muskat {

/// One kernel evaluation; is_diagonal marks entries where the removable-limit
/// formula was used instead of the off-diagonal expression.
struct KernelSample {
  double value = 0.0;
  bool is_diagonal = false;
};

/// Interface profile bundled with its first and second spectral derivatives,
/// as needed by the diagonal limits of the layer-potential integrands.
struct ProfileSamples {
  GridFunction f;
  GridFunction df;
  GridFunction d2f;

  explicit ProfileSamples(const GridFunction& profile);
};

/// Periodic Newtonian kernel (1/4pi) ln(cosh y - cos x). Throws on the
/// singular point (0, 0) mod 2pi.
double newtonian(double x, double y);

/// Integrand of the adjoint double layer operator at nodes (i, j):
///   (1/4pi) [sinh(f_i - f_j) - sin(x_i - x_j) f'_i] / [cosh(f_i - f_j) - cos(x_i - x_j)],
/// diagonal limit -f''_i / (4pi (1 + f'_i^2)).
KernelSample kstar_integrand(const ProfileSamples& p, std::size_t i, std::size_t j);

/// Integrand of the boundary double layer operator; adjoint of the above:
/// numerator sin(x_i - x_j) f'_j - sinh(f_i - f_j), same diagonal limit.
KernelSample k_integrand(const ProfileSamples& p, std::size_t i, std::size_t j);

/// Dirichlet-Neumann integrand (non-removable 2/(x-x') singularity):
///   (1/4pi) [sin(x_i - x_j) + sinh(f_i - f_j) f'_i] / [cosh(f_i - f_j) - cos(x_i - x_j)].
/// The diagonal is rejected; evaluation there belongs to the log-split path.
KernelSample dno_integrand(const ProfileSamples& p, std::size_t i, std::size_t j);

/// Continuous remainder of the log split:
///   ln(1 + sinh^2((f_i - f_j)/2) / sin^2((x_i - x_j)/2)),
/// diagonal limit ln(1 + f'_i^2).
KernelSample smooth_log_integrand(const ProfileSamples& p, std::size_t i, std::size_t j);

}  // namespace muskat
