#pragma once

#include "muskat/dno.hpp"
#include "muskat/grid.hpp"
#include "muskat/state.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace muskat {

struct DiagnosticsRecord {
  double time = 0.0;
  double sup_norm = 0.0;
  double lip_seminorm = 0.0;  // max forward difference quotient
  double l2_norm = 0.0;       // sqrt(dx * sum f^2)
  double dn_pairing = 0.0;    // dx * sum f * G(f)f
  double theta_l2 = 0.0;
  std::optional<double> sigma_min;  // cadence-gated, filled by callers
};

double sup_norm(const GridFunction& u);
double lip_seminorm(const GridFunction& u);
double l2_norm(const GridFunction& u);

DiagnosticsRecord record(const InterfaceState& state, const DnoResult& dno_result);

struct ModulusReport {
  bool pass = true;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  double worst_excess = 0.0;  // |f_i - f_j| - gamma(d(x_i, x_j)) at the worst pair
};

/// Exhaustive O(n^2) check of |f(x_i) - f(x_j)| <= gamma(d(x_i, x_j)) + tol
/// with periodic (geodesic) distance d.
ModulusReport modulus_check(const GridFunction& f,
                            const std::function<double(double)>& gamma,
                            double tol = 0.0);

/// Spatial sup-convolution with periodic distance:
///   f^delta(x) = max_y f(y) - d(x, y)^2 / (2 delta),
/// exact discrete maximum over all grid nodes.
GridFunction sup_convolution(const GridFunction& f, double delta);
GridFunction inf_convolution(const GridFunction& g, double delta);

/// Space-time variant over snapshots (t_i, f_i): the scan runs over all
/// (node, snapshot) pairs with |t-s|^2 weighted by the same delta.
std::vector<GridFunction> sup_convolution(const std::vector<GridFunction>& snaps,
                                          const std::vector<double>& times,
                                          double delta);
std::vector<GridFunction> inf_convolution(const std::vector<GridFunction>& snaps,
                                          const std::vector<double>& times,
                                          double delta);

}  // namespace muskat
