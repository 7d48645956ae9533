#pragma once

#include "muskat/grid.hpp"
#include "muskat/kernels.hpp"

#include <Eigen/Dense>

namespace muskat {

enum class OperatorTag { kKStar, kK };

/// Dense trapezoid Nystrom discretization: entries(i,j) = integrand(i,j) * dx,
/// so entries * h approximates the integral operator applied to h. Diagonal
/// entries use the removable-limit formulas. Row sums (tag kK) and column
/// sums (tag kKStar) approximate K[f]1 = 0, the jump-relation value for this
/// kernel convention.
struct KernelMatrix {
  Eigen::MatrixXd entries;
  PeriodicGrid grid;
  OperatorTag operator_tag;
  double quadrature_weight;  // the trapezoid weight dx
};

KernelMatrix assemble(const GridFunction& f, OperatorTag tag);

struct DensitySolution {
  GridFunction theta;
  double residual_norm = 0.0;
  double sigma_min_estimate = 0.0;
  int iterations = 0;
};

/// Solve (1/2 I - K*[f]) theta = rhs on the zero-mean subspace.
/// rhs must have zero mean (it is an exact derivative); tol is absolute on
/// the l2 residual. Dense LU for n <= 1024, restart-free GMRES above.
DensitySolution solve_theta(const GridFunction& f, const GridFunction& rhs,
                            double tol = 1e-12);

/// Solve (1/2 I + K[f]) Theta = g on the full space.
GridFunction solve_Theta(const GridFunction& f, const GridFunction& g,
                         double tol = 1e-12);

/// Smallest singular value of (1/2 I - K*[f]) restricted to the zero-mean
/// subspace, by dense SVD. Grids above `cap` nodes are rejected (cost guard).
double sigma_min_monitor(const GridFunction& f, std::size_t cap = 512);

}  // namespace muskat
