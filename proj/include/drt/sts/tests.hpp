#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "drt/sts/config.hpp"
#include "drt/sts/test_id.hpp"

namespace drt::sts {

/// One test on one sequence. When not applicable (too short, too few
/// cycles) p_values is empty and reason says why.
struct TestResult {
  TestId id = TestId::Frequency;
  bool applicable = true;
  std::string reason;
  std::vector<double> p_values;
};

/// Runs one test on a 0/1 sequence. Throws ConfigError on invalid parameters.
TestResult run_named_test(TestId id, std::span<const std::uint8_t> bits, const SuiteConfig& config);

/// Runs config.tests in canonical test order.
std::vector<TestResult> run_suite(std::span<const std::uint8_t> bits, const SuiteConfig& config);

namespace tests {

// Individual tests; each returns one p-value per sub-item.
TestResult frequency(std::span<const std::uint8_t> bits);
TestResult block_frequency(std::span<const std::uint8_t> bits, unsigned m);
TestResult runs(std::span<const std::uint8_t> bits);
TestResult longest_run(std::span<const std::uint8_t> bits);
TestResult rank(std::span<const std::uint8_t> bits);
TestResult spectral(std::span<const std::uint8_t> bits);
TestResult non_overlapping_template(std::span<const std::uint8_t> bits, unsigned m);
TestResult overlapping_template(std::span<const std::uint8_t> bits, unsigned m);
TestResult universal(std::span<const std::uint8_t> bits, unsigned l);
TestResult linear_complexity(std::span<const std::uint8_t> bits, unsigned m);
TestResult serial(std::span<const std::uint8_t> bits, unsigned m);
TestResult approximate_entropy(std::span<const std::uint8_t> bits, unsigned m);
TestResult cumulative_sums(std::span<const std::uint8_t> bits);
TestResult random_excursions(std::span<const std::uint8_t> bits);
TestResult random_excursions_variant(std::span<const std::uint8_t> bits);

/// Linear complexity of a 0/1 sequence by Berlekamp-Massey.
unsigned berlekamp_massey(std::span<const std::uint8_t> bits);
/// GF(2) rank of up to 32 rows of 32 bits.
unsigned rank32(std::span<const std::uint32_t> rows);

}  // namespace tests

}  // namespace drt::sts
