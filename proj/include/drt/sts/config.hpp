#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "drt/sts/test_id.hpp"

namespace drt::sts {

struct SuiteConfig {
  std::size_t sequence_length = 1'000'000;  // L, bits
  std::size_t max_sequences = 0;            // cap on S; 0 = floor(total / L)
  double alpha = 0.01;
  double uniformity_threshold = 1e-4;

  unsigned block_frequency_m = 128;
  unsigned non_overlapping_m = 9;
  unsigned overlapping_m = 9;
  unsigned serial_m = 16;
  unsigned approximate_entropy_m = 10;
  unsigned linear_complexity_m = 500;
  unsigned universal_l = 0;  // 0: chosen from L; Q = 10 * 2^L

  std::vector<TestId> tests{kAllTests.begin(), kAllTests.end()};

  /// Throws ConfigError on out-of-range parameters.
  void validate() const;
};

/// Aperiodic templates of length m in ascending order (first bit most
/// significant), capped at 148 like the reference suite.
std::vector<unsigned> aperiodic_templates(unsigned m);
inline constexpr std::size_t kMaxTemplates = 148;

/// Number of p-values the test emits under config.
std::size_t sub_item_count(TestId id, const SuiteConfig& config);
/// Labels for each sub-item, e.g. "000000001" for NOT, "x=-4" for RE.
std::vector<std::string> sub_item_labels(TestId id, const SuiteConfig& config);

}  // namespace drt::sts
