#pragma once

#include <filesystem>
#include <string>

namespace qpm {

/// Shortest round-trip decimal representation (std::to_chars); deterministic
/// and locale-independent, used for every numeric field written to disk.
std::string format_double(double value);

/// Write via a temp file in the same directory followed by an atomic rename.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace qpm
