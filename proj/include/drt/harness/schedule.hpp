#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drt/ciphers/variant.hpp"
#include "drt/harness/fixtures.hpp"

namespace drt::harness {

struct TestCase {
  ciphers::CipherId cipher = ciphers::CipherId::Hc128;
  int method = 1;
  unsigned index = 0;  // 0..23
  ciphers::KeyIv kiv;
  std::optional<unsigned> u;  // key byte position (methods 1, 2)
  std::optional<unsigned> v;  // iv byte position (methods 1-4)

  /// "m1#0" style identifier used in errors and manifests.
  [[nodiscard]] std::string id() const;
};

inline constexpr std::size_t kCasesPerMethod = 24;

/// Key and iv byte patterns of methods 1 and 3.
inline constexpr std::uint8_t kKeyPattern[8] = {0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80};
inline constexpr std::uint8_t kIvPattern[8] = {0x10, 0x20, 0x40, 0x80, 0x01, 0x02, 0x04, 0x08};

/// (u, v) byte positions for methods 1 and 2; methods 3 and 4 use the v's.
std::vector<std::pair<unsigned, unsigned>> positions(ciphers::CipherId id);

/// The 24 cases of one method, index = position * 8 + pattern. Method 5
/// needs fixtures; throws ParameterError otherwise or for a bad method.
std::vector<TestCase> schedule(int method, ciphers::CipherId id, const FixtureSet* fixtures = nullptr);

/// Parses "1-5", "1,3,5", "2" into ascending unique methods.
std::vector<int> parse_methods(const std::string& text);

}  // namespace drt::harness
