#pragma once

#include "muskat/grid.hpp"

namespace muskat {

/// The evolving unknown: interface profile f with time and the physical
/// parameters kappa = rho/mu > 0 and viscosity epsilon >= 0.
struct InterfaceState {
  GridFunction f;
  double time = 0.0;
  double kappa = 1.0;
  double epsilon = 0.0;
};

}  // namespace muskat
