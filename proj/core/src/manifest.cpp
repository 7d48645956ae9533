#include "muskat/manifest.hpp"

#include "muskat/sha256.hpp"

#include <json.hpp>

#include <fstream>

namespace muskat {

std::string muskat_version() { return "0.1.0"; }

void RunManifest::add_file(const std::filesystem::path& path) {
  file_digests[path.filename().string()] = sha256_file_hex(path);
}

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = config_echo;
  j["code_version"] = code_version;
  j["seed"] = seed;
  j["wall_seconds"] = wall_seconds;
  j["files"] = file_digests;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path.string());
  out << j.dump(2) << "\n";
}

bool RunManifest::verify(const std::filesystem::path& directory) const {
  for (const auto& [name, digest] : file_digests) {
    if (sha256_file_hex(directory / name) != digest) return false;
  }
  return true;
}

}  // namespace muskat
