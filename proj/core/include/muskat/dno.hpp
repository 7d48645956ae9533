#pragma once

#include "muskat/bie.hpp"
#include "muskat/grid.hpp"

namespace muskat {

struct DnoResult {
  GridFunction gf;              // values of G(f)g on the grid
  DensitySolution theta_used;
  double pairing = 0.0;         // dx * sum g * G(f)g
};

/// Dirichlet-Neumann operator via the log split: with theta solving
/// (1/2 I - K*) theta = dg/dx,
///   G(f)g = d/dx [ (1/4pi) int ln(1 + sinh^2(df/2)/sin^2(h/2)) theta ] + (1/2) H(theta).
/// The full singularity sits in the Hilbert transform; the remaining
/// integrand is continuous with diagonal value ln(1 + f'^2).
DnoResult apply_dno(const GridFunction& f, const GridFunction& g);

/// Exact flat-interface path: G(0)g = |D|g.
GridFunction dno_flat(const GridFunction& g);

/// Checks G(f+c)(g+c) = G(f)g to `tol` in sup norm.
bool dno_vertical_shift_invariance(const GridFunction& f, const GridFunction& g,
                                   double c, double tol = 1e-8);

}  // namespace muskat
