#include "drt/harness/fixtures.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "drt/errors.hpp"
#include "drt/hex.hpp"

namespace drt::harness {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

void read_bytes(std::istringstream& in, std::string_view tag, std::array<std::uint8_t, 16>& out, unsigned index) {
  std::string word;
  if (!(in >> word) || lower(word) != tag) {
    throw ParameterError("fixture " + std::to_string(index) + ": expected '" + std::string(tag) + "', got '" + word + "'");
  }
  for (auto& b : out) {
    if (!(in >> word)) throw ParameterError("fixture " + std::to_string(index) + ": truncated " + std::string(tag));
    const auto v = parse_hex_bytes(word);
    if (v.size() != 1) throw ParameterError("fixture " + std::to_string(index) + ": bad byte '" + word + "'");
    b = v[0];
  }
}

}  // namespace

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed) noexcept {
  std::uint64_t h = seed;
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fixture_digest(const FixtureSet& set) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& e : set.entries) {
    h = fnv1a64(e.key, h);
    h = fnv1a64(e.iv, h);
  }
  return h;
}

FixtureSet parse_fixtures(std::string_view text) {
  std::istringstream in{std::string(text)};
  FixtureSet set;
  std::string word;
  while (in >> word) {
    FixtureEntry e;
    try {
      std::size_t used = 0;
      e.index = static_cast<unsigned>(std::stoul(word, &used));
      if (used != word.size()) throw std::invalid_argument(word);
    } catch (const std::exception&) {
      throw ParameterError("fixture index expected, got '" + word + "'");
    }
    read_bytes(in, "key", e.key, e.index);
    read_bytes(in, "iv", e.iv, e.index);
    set.entries.push_back(e);
  }
  return set;
}

FixtureSet load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixture file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  auto set = parse_fixtures(ss.str());
  if (set.entries.size() != kFixtureCount) {
    throw ParameterError(path.string() + ": expected " + std::to_string(kFixtureCount) + " fixtures, found " +
                         std::to_string(set.entries.size()));
  }
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    if (set.entries[i].index != i + 1) throw ParameterError(path.string() + ": fixtures out of order");
  }
  if (fixture_digest(set) != kFixtureDigest) throw ParameterError(path.string() + ": fixture digest mismatch");
  return set;
}

std::filesystem::path default_fixture_path() {
  if (const char* env = std::getenv("DRT_FIXTURES"); env != nullptr && *env != '\0') return env;
  return DRT_FIXTURES_PATH;
}

}  // namespace drt::harness
