#pragma once

#include "muskat/grid.hpp"

namespace muskat {

/// Spectral derivative: Fourier multiplier i*k with the Nyquist mode zeroed.
/// Output has zero mean to machine precision.
GridFunction dft_derivative(const GridFunction& u);

/// Periodic Hilbert transform, kernel (1/2pi) pv cot((x-x')/2): Fourier
/// multiplier -i*sgn(k). The zero mode and the Nyquist mode are annihilated,
/// so H(H(u)) = -(u - mean(u)) and |D| = H o d/dx hold discretely.
GridFunction hilbert_transform(const GridFunction& u);

/// Fourier multiplier |k| (Nyquist zeroed, consistent with the identity
/// |D|u = H(du/dx)). Equals the flat-interface Dirichlet-Neumann operator.
GridFunction abs_derivative(const GridFunction& u);

/// Exact diffusion integrating factor: multiplier e^{-nu*k^2}, nu >= 0.
GridFunction heat_factor(const GridFunction& u, double nu);

/// Periodic Gaussian mollification of width w (heat_factor with nu = w^2/2).
GridFunction mollify(const GridFunction& u, double width);

/// 2/3-rule dealiasing mask: modes |k| > n/3 zeroed.
GridFunction dealias_two_thirds(const GridFunction& u);

}  // namespace muskat
