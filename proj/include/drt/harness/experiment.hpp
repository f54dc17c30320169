#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drt/ciphers/keystream.hpp"
#include "drt/harness/schedule.hpp"
#include "drt/harness/summary.hpp"
#include "drt/sts/bitstream.hpp"
#include "drt/sts/classify.hpp"

namespace drt::harness {

inline constexpr std::uint64_t kMiB = 1ULL << 20;
inline constexpr std::uint64_t kDeskScaleBytes = 8 * kMiB;
inline constexpr std::uint64_t kFullScaleBytes = 128 * kMiB;

/// "8MiB", "128MByte", "1000000", "4k". Binary units unless the suffix is
/// KB/MB/GB. Throws ParameterError.
std::uint64_t parse_size(const std::string& text);

/// A failure inside one case; what() names the case.
class CaseError : public std::runtime_error {
 public:
  CaseError(std::string case_id, const std::string& message)
      : std::runtime_error(case_id + ": " + message), case_id_(std::move(case_id)) {}
  [[nodiscard]] const std::string& case_id() const noexcept { return case_id_; }

 private:
  std::string case_id_;
};

/// Streams the first `length` keystream bytes of a generator.
class GeneratorSource final : public sts::ByteSource {
 public:
  GeneratorSource(std::unique_ptr<ciphers::KeystreamGenerator> gen, std::uint64_t length)
      : gen_(std::move(gen)), remaining_(length) {}
  std::size_t read(std::span<std::uint8_t> out) override;

 private:
  std::unique_ptr<ciphers::KeystreamGenerator> gen_;
  std::uint64_t remaining_;
};

struct CaseOutcome {
  sts::FaultRecord record;
  std::vector<sts::TestOutcome> tests;
  std::size_t sequences = 0;
};

/// Generates the case's keystream for the variant and runs the suite over
/// floor(8 * stream_bytes / L) sequences (capped by max_sequences).
CaseOutcome run_case(const TestCase& c, const ciphers::CipherVariant& variant, std::uint64_t stream_bytes,
                     const sts::SuiteConfig& config);

struct ExperimentConfig {
  ciphers::CipherId cipher = ciphers::CipherId::Hc128;
  std::vector<std::string> variants{"rot"};  // "rot" and/or "drt"
  std::vector<int> methods{1, 2, 3, 4, 5};
  std::uint64_t stream_bytes = kDeskScaleBytes;
  sts::SuiteConfig suite;
  unsigned jobs = 1;
  std::filesystem::path fixtures;  // empty: default_fixture_path()
};

struct CaseResult {
  TestCase test_case;
  bool complete = false;
  std::string error;
  sts::FaultRecord record;
  std::size_t sequences = 0;
};

struct MethodResult {
  int method = 1;
  std::vector<CaseResult> cases;
  SummaryRow summary;  // valid only when every case completed
};

struct VariantReport {
  ciphers::CipherId cipher = ciphers::CipherId::Hc128;
  std::string variant;
  std::vector<MethodResult> methods;
  SummaryRow total;

  [[nodiscard]] bool complete() const;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<VariantReport> variants;

  [[nodiscard]] bool complete() const;
};

/// Called after each finished case (from worker threads, serialized).
using ProgressFn = std::function<void(const std::string& variant, const CaseResult&)>;

/// Runs every (variant, method, case). Failed cases are recorded as
/// incomplete instead of aborting the run. Output order is independent of jobs.
ExperimentResult run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

ciphers::CipherVariant variant_by_tag(ciphers::CipherId id, const std::string& tag);

}  // namespace drt::harness
