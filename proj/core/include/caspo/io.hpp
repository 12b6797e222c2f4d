#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace caspo {

// Atomic file write: temp file in the same directory, fsync, rename.
void atomic_write_file(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

std::vector<std::string> read_lines(const std::filesystem::path& path);

// FNV-1a 64-bit over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

std::uint64_t hash_file(const std::filesystem::path& path);

std::string hex_u64(std::uint64_t v);

// Shortest-roundtrip decimal rendering of a double (%.17g trimmed), used so
// CSV/JSONL output is byte-stable across reruns.
std::string format_double(double v);

}  // namespace caspo
