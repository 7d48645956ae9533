#pragma once

#include "muskat/config.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace muskat {

/// Reproducibility sidecar written next to every command's outputs: config
/// echo, code version, grid/scheme parameters, seed, wall clock, and SHA-256
/// digests of the emitted files.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> config_echo;
  std::string code_version;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::map<std::string, std::string> file_digests;  // filename -> sha256 hex

  void add_file(const std::filesystem::path& path);
  void write(const std::filesystem::path& path) const;

  /// Recompute digests of the listed files and compare. Returns true iff all
  /// match.
  bool verify(const std::filesystem::path& directory) const;
};

std::string muskat_version();

}  // namespace muskat
