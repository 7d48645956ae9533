#pragma once

#include "muskat/stepper.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace muskat {

/// Serialize a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

/// Trajectory CSV: header "time,x_0,...,x_{n-1}", one row per snapshot.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Diagnostics CSV: columns time,sup_norm,lip_seminorm,l2_norm,dn_pairing,theta_l2.
void write_diagnostics_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Cauchy report CSV for a viscosity sweep: columns j,eps_j,eps_j1,d_j.
void write_cauchy_csv(const std::filesystem::path& path,
                      const std::vector<double>& eps_list, const CauchyReport& report);

/// Per-mode fitted decay rates: columns mode,fitted_rate,reference_rate,ratio.
struct SpectrumRow {
  int mode = 0;
  double fitted_rate = 0.0;
  double reference_rate = 0.0;
};
void write_spectrum_csv(const std::filesystem::path& path, const std::vector<SpectrumRow>& rows);

}  // namespace muskat
