#include "drt/sts/config.hpp"

#include "drt/errors.hpp"

namespace drt::sts {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

std::string bits_of(unsigned value, unsigned m) {
  std::string s(m, '0');
  for (unsigned i = 0; i < m; ++i) {
    if ((value >> (m - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

}  // namespace

void SuiteConfig::validate() const {
  require(sequence_length >= 100, "sequence_length must be at least 100 bits");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(uniformity_threshold > 0.0 && uniformity_threshold < 1.0, "uniformity_threshold must lie in (0, 1)");
  require(block_frequency_m >= 1 && block_frequency_m <= sequence_length, "block_frequency_m out of range");
  require(non_overlapping_m >= 2 && non_overlapping_m <= 16, "non_overlapping_m must lie in [2, 16]");
  require(overlapping_m >= 2 && overlapping_m <= 16, "overlapping_m must lie in [2, 16]");
  require(serial_m >= 3 && serial_m <= 24, "serial_m must lie in [3, 24]");
  require(approximate_entropy_m >= 1 && approximate_entropy_m <= 23, "approximate_entropy_m must lie in [1, 23]");
  require(linear_complexity_m >= 2 && linear_complexity_m <= 5000, "linear_complexity_m must lie in [2, 5000]");
  require(universal_l == 0 || (universal_l >= 6 && universal_l <= 16), "universal_l must be 0 (auto) or in [6, 16]");
  require(!tests.empty(), "at least one test must be selected");
}

std::vector<unsigned> aperiodic_templates(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned v = 0; v < (1u << m) && out.size() < kMaxTemplates; ++v) {
    bool aperiodic = true;
    for (unsigned s = 1; s < m && aperiodic; ++s) {
      // leading m-s bits equal trailing m-s bits means the pattern overlaps itself at shift s
      const unsigned keep = m - s;
      const unsigned mask = (1u << keep) - 1;
      if ((v >> s) == (v & mask)) aperiodic = false;
    }
    if (aperiodic) out.push_back(v);
  }
  return out;
}

std::size_t sub_item_count(TestId id, const SuiteConfig& config) {
  switch (id) {
    case TestId::NonOverlappingTemplate: return aperiodic_templates(config.non_overlapping_m).size();
    case TestId::Serial:
    case TestId::CumulativeSums: return 2;
    case TestId::RandomExcursions: return 8;
    case TestId::RandomExcursionsVariant: return 18;
    default: return 1;
  }
}

std::vector<std::string> sub_item_labels(TestId id, const SuiteConfig& config) {
  switch (id) {
    case TestId::NonOverlappingTemplate: {
      std::vector<std::string> out;
      for (unsigned t : aperiodic_templates(config.non_overlapping_m)) out.push_back(bits_of(t, config.non_overlapping_m));
      return out;
    }
    case TestId::Serial: return {"p1", "p2"};
    case TestId::CumulativeSums: return {"forward", "reverse"};
    case TestId::RandomExcursions: {
      std::vector<std::string> out;
      for (int x : {-4, -3, -2, -1, 1, 2, 3, 4}) out.push_back("x=" + std::to_string(x));
      return out;
    }
    case TestId::RandomExcursionsVariant: {
      std::vector<std::string> out;
      for (int x = -9; x <= 9; ++x) {
        if (x != 0) out.push_back("x=" + std::to_string(x));
      }
      return out;
    }
    default: return {std::string(abbreviation(id))};
  }
}

}  // namespace drt::sts
