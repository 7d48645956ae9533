#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace muskat {

/// Frozen calibration constants. The sigma_min floor comes from the a = 0.5
/// member of the steepness family a*cos(x) at N = 256 (product observed at
/// 1.3686, frozen slightly below); the operator bound constant from the same
/// family (ratio observed <= 0.73); the trajectory bound from suite runs with
/// kappa = 1 (observed <= 2.6).
inline constexpr double kSigmaMinCalibration = 1.35;
inline constexpr double kThetaOperatorCalibration = 1.0;
inline constexpr double kThetaTrajectoryCalibration = 3.0;

/// Maximum-principle tolerance separating solver error from genuine
/// violations: 1e-6 + 10 dx^2.
double max_principle_tol(std::size_t n_points);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // the measured quantity vs its threshold
};

/// The full invariant suite behind `muskat validate`: spectral identities,
/// flat-interface agreement, disk oracle, jump relations, DN positivity,
/// maximum/comparison principles, operator bounds, sup/inf convolution
/// properties. Deterministic given the seed.
std::vector<CheckResult> run_validation(std::uint64_t seed);

}  // namespace muskat
