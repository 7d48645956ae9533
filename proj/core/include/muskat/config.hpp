#pragma once

#include "muskat/stepper.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace muskat {

/// Flat key = value configuration text; '#' starts a comment, unknown keys
/// are errors. Recognized keys:
///   n_points, kappa, epsilon, t_final, dt | cfl, output_cadence,
///   initial_profile (zero|constant|cosine|sine|kink), initial_amplitude,
///   initial_mode, initial_offset, mollifier_width (number or "auto"),
///   scheme (euler|two_stage), dealias (true|false), eps_list (comma list)
struct ParsedConfig {
  SimConfig sim;
  std::vector<double> eps_list;                    // optional, for converge
  std::map<std::string, std::string> raw;          // echo for the manifest
};

ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::filesystem::path& path);

}  // namespace muskat
