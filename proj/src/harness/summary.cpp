#include "drt/harness/summary.hpp"

#include <cmath>

#include "drt/errors.hpp"
#include "drt/harness/schedule.hpp"

namespace drt::harness {

SummaryRow aggregate_totals(std::span<const unsigned> fault_totals) {
  if (fault_totals.size() != kCasesPerMethod) {
    throw ParameterError("aggregate needs " + std::to_string(kCasesPerMethod) + " records, got " +
                         std::to_string(fault_totals.size()));
  }
  SummaryRow row;
  for (unsigned t : fault_totals) {
    if (t == 0) ++row.a;
    else if (t == 1) ++row.b1;
    else if (t == 2) ++row.b2;
    else ++row.b3;
  }
  row.b = row.b1 + row.b2 + row.b3;
  return row;
}

SummaryRow aggregate(std::span<const sts::FaultRecord> records) {
  std::vector<unsigned> t;
  t.reserve(records.size());
  for (const auto& r : records) t.push_back(r.fault_total);
  return aggregate_totals(t);
}

SummaryRow totals(std::span<const SummaryRow> rows) {
  SummaryRow sum;
  for (const auto& r : rows) {
    sum.a += r.a;
    sum.b += r.b;
    sum.b1 += r.b1;
    sum.b2 += r.b2;
    sum.b3 += r.b3;
  }
  return sum;
}

std::optional<unsigned> b1_ratio_percent(const SummaryRow& row) {
  if (row.b == 0) return std::nullopt;
  return static_cast<unsigned>(std::lround(100.0 * row.b1 / row.b));
}

std::string ratio_text(std::optional<unsigned> percent) {
  return percent ? std::to_string(*percent) + "%" : "—";
}

std::string a_over_b(const SummaryRow& row) { return std::to_string(row.a) + "/" + std::to_string(row.b); }

std::string cell_text(const sts::FaultRecord& record, const sts::SuiteConfig& config) {
  std::string out;
  for (const auto& [id, count] : record.faults) {
    if (count == 0) continue;
    if (!out.empty()) out += ' ';
    out += sts::abbreviation(id);
    if (count > 1 || sts::sub_item_count(id, config) > 1) out += "-" + std::to_string(count);
  }
  return out.empty() ? "0" : out;
}

}  // namespace drt::harness
