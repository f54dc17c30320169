#include "drt/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <thread>

#include "drt/errors.hpp"
#include "drt/sts/tests.hpp"

namespace drt::harness {

std::uint64_t parse_size(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("bad size '" + text + "'");
  }
  std::string unit = text.substr(used);
  for (auto& c : unit) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::uint64_t scale = 0;
  if (unit.empty() || unit == "b") scale = 1;
  else if (unit == "k" || unit == "kib") scale = 1ULL << 10;
  else if (unit == "m" || unit == "mib" || unit == "mbyte") scale = 1ULL << 20;
  else if (unit == "g" || unit == "gib" || unit == "gbyte") scale = 1ULL << 30;
  else if (unit == "kb") scale = 1000;
  else if (unit == "mb") scale = 1000 * 1000;
  else if (unit == "gb") scale = 1000ULL * 1000 * 1000;
  else throw ParameterError("unknown size unit in '" + text + "'");
  if (value == 0) throw ParameterError("size must be positive");
  return value * scale;
}

std::size_t GeneratorSource::read(std::span<std::uint8_t> out) {
  const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(out.size(), remaining_));
  if (n == 0) return 0;
  gen_->generate(out.first(n));
  remaining_ -= n;
  return n;
}

ciphers::CipherVariant variant_by_tag(ciphers::CipherId id, const std::string& tag) {
  if (tag == "rot") return ciphers::standard_variant(id);
  if (tag == "drt") return ciphers::drt_variant(id);
  throw ParameterError("variant must be rot or drt, got '" + tag + "'");
}

CaseOutcome run_case(const TestCase& c, const ciphers::CipherVariant& variant, std::uint64_t stream_bytes,
                     const sts::SuiteConfig& config) {
  try {
    config.validate();
    const std::size_t count = sts::sequence_count(static_cast<std::size_t>(stream_bytes * 8), config);
    if (count == 0) {
      throw ParameterError("stream of " + std::to_string(stream_bytes) + " bytes is shorter than one " +
                           std::to_string(config.sequence_length) + "-bit sequence");
    }
    const std::uint64_t needed = (static_cast<std::uint64_t>(count) * config.sequence_length + 7) / 8;
    GeneratorSource source(ciphers::make_generator(variant, c.kiv), std::min(stream_bytes, needed));
    sts::SequenceReader reader(source, config.sequence_length);
    sts::SuiteAccumulator acc(config);
    sts::Bits bits;
    for (std::size_t i = 0; i < count && reader.next(bits); ++i) acc.add(sts::run_suite(bits, config));
    CaseOutcome out;
    out.sequences = acc.sequences();
    out.tests = acc.classify();
    out.record = sts::fault_record(out.tests);
    return out;
  } catch (const std::exception& e) {
    throw CaseError(c.id(), e.what());
  }
}

bool VariantReport::complete() const {
  for (const auto& m : methods) {
    for (const auto& c : m.cases) {
      if (!c.complete) return false;
    }
  }
  return true;
}

bool ExperimentResult::complete() const {
  return std::all_of(variants.begin(), variants.end(), [](const auto& v) { return v.complete(); });
}

ExperimentResult run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
  config.suite.validate();
  if (config.variants.empty()) throw ConfigError("no variant selected");
  if (config.methods.empty()) throw ConfigError("no method selected");

  FixtureSet fixtures;
  if (std::find(config.methods.begin(), config.methods.end(), 5) != config.methods.end()) {
    fixtures = load_fixtures(config.fixtures.empty() ? default_fixture_path() : config.fixtures);
  }

  ExperimentResult result;
  result.config = config;
  struct Job {
    std::size_t variant, method, index;
  };
  std::vector<Job> jobs;
  std::vector<ciphers::CipherVariant> variants;
  for (std::size_t vi = 0; vi < config.variants.size(); ++vi) {
    variants.push_back(variant_by_tag(config.cipher, config.variants[vi]));
    VariantReport report{config.cipher, config.variants[vi], {}, {}};
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
      MethodResult m;
      m.method = config.methods[mi];
      for (auto& tc : schedule(m.method, config.cipher, &fixtures)) {
        jobs.push_back({vi, mi, m.cases.size()});
        m.cases.push_back(CaseResult{std::move(tc), false, {}, {}, 0});
      }
      report.methods.push_back(std::move(m));
    }
    result.variants.push_back(std::move(report));
  }

  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const auto& job = jobs[j];
      auto& slot = result.variants[job.variant].methods[job.method].cases[job.index];
      try {
        auto outcome = run_case(slot.test_case, variants[job.variant], config.stream_bytes, config.suite);
        slot.record = std::move(outcome.record);
        slot.sequences = outcome.sequences;
        slot.complete = true;
      } catch (const std::exception& e) {
        slot.error = e.what();
      }
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(result.variants[job.variant].variant, slot);
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(jobs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (auto& v : result.variants) {
    std::vector<SummaryRow> rows;
    for (auto& m : v.methods) {
      const bool done = std::all_of(m.cases.begin(), m.cases.end(), [](const auto& c) { return c.complete; });
      if (done) {
        std::vector<sts::FaultRecord> records;
        for (const auto& c : m.cases) records.push_back(c.record);
        m.summary = aggregate(records);
      }
      rows.push_back(m.summary);
    }
    v.total = totals(rows);
  }
  return result;
}

}  // namespace drt::harness
