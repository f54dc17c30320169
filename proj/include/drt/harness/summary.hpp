#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drt/sts/classify.hpp"
#include "drt/sts/config.hpp"

namespace drt::harness {

/// A: cases with no fault; B1/B2/B3: exactly one, exactly two, more than two.
struct SummaryRow {
  unsigned a = 0;
  unsigned b = 0;
  unsigned b1 = 0;
  unsigned b2 = 0;
  unsigned b3 = 0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

/// Classifies exactly 24 records; throws ParameterError otherwise.
SummaryRow aggregate(std::span<const sts::FaultRecord> records);
/// Same, from fault totals alone.
SummaryRow aggregate_totals(std::span<const unsigned> fault_totals);
/// Columnwise sums.
SummaryRow totals(std::span<const SummaryRow> rows);

/// B1 / B as a rounded percentage; empty when B = 0.
std::optional<unsigned> b1_ratio_percent(const SummaryRow& row);
/// "63%", or "—" when undefined.
std::string ratio_text(std::optional<unsigned> percent);
/// "68/52".
std::string a_over_b(const SummaryRow& row);

/// Table notation: "0", "NOT-2", "FFT NOT-1 REV-1". A "-y" suffix appears
/// when the test has several sub-items or y > 1.
std::string cell_text(const sts::FaultRecord& record, const sts::SuiteConfig& config);

}  // namespace drt::harness
