#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace muskat {

/// SHA-256 of a byte string, hex-encoded.
std::string sha256_hex(const std::string& data);

/// SHA-256 of a file's contents, hex-encoded.
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace muskat
