#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drt::harness {

struct FixtureEntry {
  unsigned index = 0;
  std::array<std::uint8_t, 16> key{};
  std::array<std::uint8_t, 16> iv{};
};

/// The 24 random key/iv series used by method 5.
struct FixtureSet {
  std::vector<FixtureEntry> entries;
};

inline constexpr std::size_t kFixtureCount = 24;
/// FNV-1a 64 over key || iv of every entry in order, pinned at ingestion.
inline constexpr std::uint64_t kFixtureDigest = 0xab96dcc77509234dULL;

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed = 0xcbf29ce484222325ULL) noexcept;
std::uint64_t fixture_digest(const FixtureSet& set) noexcept;

/// Parses repeating records: an index line, "Key" + 16 hex bytes, "iv" + 16
/// hex bytes. Whitespace-tolerant, hex case-insensitive. Throws ParameterError.
FixtureSet parse_fixtures(std::string_view text);
/// Reads and parses; throws IoError when the file is missing and
/// ParameterError when the count or digest is wrong.
FixtureSet load_fixtures(const std::filesystem::path& path);
/// DRT_FIXTURES from the environment, else the bundled data file.
std::filesystem::path default_fixture_path();

}  // namespace drt::harness
