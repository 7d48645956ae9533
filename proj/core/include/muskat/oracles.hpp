#pragma once

#include "muskat/grid.hpp"

namespace muskat {

struct FieldPoint {
  double x = 0.0;  // radians
  double y = 0.0;
};

/// Normal derivative of the harmonic extension to the unit disk at boundary
/// node i, by the symmetrized second-difference formula
///   -(1/8pi) int [g(x+x') + g(x-x') - 2 g(x)] / sin^2(x'/2) dx'
/// (already PV-free); the x' = 0 limit is 4 g''(x) with g'' spectral.
double disk_dno(const GridFunction& g, std::size_t node_index);

/// Convenience overload: x must coincide with a grid node (within 1e-9).
double disk_dno(const GridFunction& g, double x);

/// z . grad u(r e^{ix}) for the Poisson extension of g, 0 < r < 1, via
/// trapezoid quadrature of the radial kernel derivative against
/// g(z') - g(e^{ix}) (the constant-data identity removes the troublesome
/// part near r -> 1).
double poisson_radial_derivative(const GridFunction& g, double r, double x);

struct InteriorValue {
  double value = 0.0;
  bool reduced_accuracy = false;  // point closer than 5 dx to the boundary
};

/// Interior harmonic field phi(p) = K[f] Theta (p), evaluated with the smooth
/// dipole kernel (exact off the interface, spectrally accurate). Theta is the
/// density from solve_Theta; p must satisfy y < f(x) - 1e-6.
InteriorValue harmonic_eval(const GridFunction& f, const GridFunction& Theta,
                            FieldPoint p);

/// Trigonometric interpolation of a GridFunction at arbitrary x (O(n) Dirichlet
/// kernel sum); used for boundary-distance checks.
double trig_interp(const GridFunction& u, double x);

}  // namespace muskat
