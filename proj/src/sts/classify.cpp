#include "drt/sts/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "drt/errors.hpp"
#include "drt/sts/special.hpp"

namespace drt::sts {

std::pair<double, double> proportion_interval(double alpha, std::size_t s) {
  const double p = 1.0 - alpha;
  const double half = 3.0 * std::sqrt(alpha * p / static_cast<double>(s));
  return {p - half, p + half};
}

double uniformity_p_value(const std::vector<double>& p_values) {
  std::array<std::size_t, 10> bins{};
  for (double p : p_values) {
    const auto pos = static_cast<std::size_t>(std::floor(p * 10.0));
    ++bins[std::min<std::size_t>(pos, 9)];
  }
  const double expected = static_cast<double>(p_values.size()) / 10.0;
  double chi2 = 0.0;
  for (auto b : bins) chi2 += (static_cast<double>(b) - expected) * (static_cast<double>(b) - expected) / expected;
  return igamc(9.0 / 2.0, chi2 / 2.0);
}

SubItemOutcome classify_sub_item(const std::vector<double>& p_values, const SuiteConfig& config) {
  SubItemOutcome out;
  out.sample_size = p_values.size();
  if (p_values.empty()) return out;
  out.pass_count = static_cast<std::size_t>(
      std::count_if(p_values.begin(), p_values.end(), [&](double p) { return p >= config.alpha; }));
  out.proportion = static_cast<double>(out.pass_count) / static_cast<double>(out.sample_size);
  out.uniformity_p = uniformity_p_value(p_values);
  const auto [lo, hi] = proportion_interval(config.alpha, out.sample_size);
  const bool proportion_ok = out.proportion >= lo && out.proportion <= hi;
  const bool uniform_ok = out.uniformity_p >= config.uniformity_threshold;
  out.status = proportion_ok && uniform_ok ? SubItemStatus::Pass : SubItemStatus::Fail;
  return out;
}

SuiteAccumulator::SuiteAccumulator(SuiteConfig config) : config_(std::move(config)) {
  config_.validate();
  p_values_.resize(kTestCount);
  for (auto id : config_.tests) p_values_[index_of(id)].resize(sub_item_count(id, config_));
}

void SuiteAccumulator::add(const std::vector<TestResult>& results) {
  for (const auto& r : results) {
    auto& items = p_values_[index_of(r.id)];
    if (!r.applicable) continue;
    if (r.p_values.size() != items.size()) {
      throw ParameterError(std::string(abbreviation(r.id)) + ": expected " + std::to_string(items.size()) +
                           " p-values, got " + std::to_string(r.p_values.size()));
    }
    for (std::size_t i = 0; i < items.size(); ++i) items[i].push_back(r.p_values[i]);
  }
  ++sequences_;
}

std::vector<TestOutcome> SuiteAccumulator::classify() const {
  std::vector<TestOutcome> out;
  for (auto id : kAllTests) {
    const auto& items = p_values_[index_of(id)];
    if (items.empty()) continue;
    TestOutcome t;
    t.id = id;
    const auto labels = sub_item_labels(id, config_);
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto s = classify_sub_item(items[i], config_);
      s.label = labels[i];
      if (s.status == SubItemStatus::Fail) ++t.failed_count;
      t.sub_items.push_back(std::move(s));
    }
    out.push_back(std::move(t));
  }
  return out;
}

FaultRecord fault_record(const std::vector<TestOutcome>& outcomes) {
  FaultRecord r;
  for (auto id : kAllTests) {
    for (const auto& t : outcomes) {
      if (t.id != id || t.failed_count == 0) continue;
      r.faults.emplace_back(id, t.failed_count);
      r.fault_total += t.failed_count;
    }
  }
  return r;
}

}  // namespace drt::sts
