#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "drt/sts/config.hpp"
#include "drt/sts/tests.hpp"

namespace drt::sts {

enum class SubItemStatus { Pass, Fail, NotApplicable };

struct SubItemOutcome {
  std::string label;
  SubItemStatus status = SubItemStatus::NotApplicable;
  double proportion = 0.0;
  double uniformity_p = 0.0;
  std::size_t pass_count = 0;
  std::size_t sample_size = 0;  // sequences where the test applied
};

struct TestOutcome {
  TestId id = TestId::Frequency;
  std::vector<SubItemOutcome> sub_items;
  unsigned failed_count = 0;
};

/// Acceptable proportion interval (1 - a) +/- 3 sqrt(a (1 - a) / s).
std::pair<double, double> proportion_interval(double alpha, std::size_t s);
/// Chi-square uniformity p-value over ten equal bins.
double uniformity_p_value(const std::vector<double>& p_values);
/// Classifies one sub-item from its p-values across sequences.
SubItemOutcome classify_sub_item(const std::vector<double>& p_values, const SuiteConfig& config);

/// Collects per-sequence results and classifies each sub-item.
class SuiteAccumulator {
 public:
  explicit SuiteAccumulator(SuiteConfig config);
  void add(const std::vector<TestResult>& results);
  [[nodiscard]] std::size_t sequences() const noexcept { return sequences_; }
  [[nodiscard]] std::vector<TestOutcome> classify() const;

 private:
  SuiteConfig config_;
  std::size_t sequences_ = 0;
  // [test][sub-item] -> p-values of sequences where the test applied
  std::vector<std::vector<std::vector<double>>> p_values_;
};

/// Failed sub-items per test, zeros omitted, in canonical test order.
struct FaultRecord {
  std::vector<std::pair<TestId, unsigned>> faults;
  unsigned fault_total = 0;
};

FaultRecord fault_record(const std::vector<TestOutcome>& outcomes);

}  // namespace drt::sts
