#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "drt/errors.hpp"
#include "drt/sts/bitstream.hpp"
#include "drt/sts/classify.hpp"
#include "drt/sts/special.hpp"
#include "drt/sts/tests.hpp"

using namespace drt::sts;

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct OracleLine {
  std::vector<double> p;
  bool na = false;
};

std::map<std::string, OracleLine> read_oracle(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::map<std::string, OracleLine> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string test, second;
    ss >> test >> second;
    if (second == "NA") {
      out[test].na = true;
      continue;
    }
    double p = 0;
    ss >> p;
    out[test].p.push_back(p);
  }
  return out;
}

Bits unpack(const std::vector<std::uint8_t>& bytes) {
  Bits bits;
  unpack_bits(bytes, bits);
  return bits;
}

void check_against_oracle(const std::string& stem) {
  const auto bits = unpack(read_file(std::string(DRT_TEST_DATA) + "/sts/" + stem + ".bin"));
  REQUIRE(bits.size() == 1'000'000);
  const auto oracle = read_oracle(std::string(DRT_TEST_DATA) + "/sts/" + stem + ".nistrs.txt");
  SuiteConfig config;
  const auto results = run_suite(bits, config);
  REQUIRE(results.size() == kTestCount);
  for (const auto& r : results) {
    const std::string abbr(abbreviation(r.id));
    CAPTURE(abbr);
    auto it = oracle.find(abbr);
    REQUIRE(it != oracle.end());
    CHECK(r.applicable == !it->second.na);
    if (!r.applicable) continue;
    REQUIRE(r.p_values.size() == it->second.p.size());
    CHECK(r.p_values.size() == sub_item_count(r.id, config));
    for (std::size_t i = 0; i < r.p_values.size(); ++i) {
      CAPTURE(i);
      CHECK(std::fabs(r.p_values[i] - it->second.p[i]) <= 1e-6);
      CHECK((r.p_values[i] >= config.alpha) == (it->second.p[i] >= config.alpha));
    }
  }
}

Bits alternating(std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = i % 2;
  return b;
}

}  // namespace

TEST_CASE("special functions") {
  CHECK(drt::sts::erfc(0.0) == 1.0);
  for (double a : {0.5, 1.0, 1.5, 2.5, 3.0, 4.0, 4.5, 64.0, 512.0, 16384.0, 32768.0}) {
    CHECK(igamc(a, 0.0) == 1.0);
    double prev = 1.0;
    for (double x = 0.05; x < 3.0 * a + 40.0; x *= 1.3) {
      const double q = igamc(a, x);
      CAPTURE(a);
      CAPTURE(x);
      CHECK(q <= prev + 1e-15);
      CHECK(q == doctest::Approx(boost::math::gamma_q(a, x)).epsilon(1e-9));
      CHECK(igam(a, x) + q == doctest::Approx(1.0));
      prev = q;
    }
  }
  for (double x : {0.5, 1.0, 2.5, 7.0, 100.5, 1e4}) CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.96) == doctest::Approx(0.9750021048517795));
}

TEST_CASE("frequency examples") {
  for (std::size_t n : {2u, 100u, 1000u, 100000u}) {
    const auto r = tests::frequency(alternating(n));
    CHECK(r.p_values.at(0) == 1.0);
  }
  const Bits ones(100, 1);
  const auto r = run_named_test(TestId::Frequency, ones, SuiteConfig{});
  CHECK(r.p_values.at(0) == doctest::Approx(std::erfc(10.0 / std::sqrt(2.0))));
  CHECK(r.p_values.at(0) < 0.01);
}

TEST_CASE("oracle equivalence on the e expansion") { check_against_oracle("e_1e6"); }

TEST_CASE("oracle equivalence on an HC-128 keystream") { check_against_oracle("hc128_1e6"); }

TEST_CASE("short sequences are not applicable") {
  SuiteConfig config;
  const Bits bits = alternating(100);
  const auto results = run_suite(bits, config);
  std::map<TestId, bool> applicable;
  for (const auto& r : results) {
    applicable[r.id] = r.applicable;
    if (!r.applicable) CHECK_FALSE(r.reason.empty());
    for (double p : r.p_values) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
    }
  }
  CHECK(applicable[TestId::Frequency]);
  CHECK_FALSE(applicable[TestId::LongestRun]);
  CHECK_FALSE(applicable[TestId::Rank]);
  CHECK_FALSE(applicable[TestId::Universal]);
  CHECK_FALSE(applicable[TestId::RandomExcursions]);
  CHECK_FALSE(applicable[TestId::RandomExcursionsVariant]);
}

TEST_CASE("invalid parameters are configuration errors") {
  SuiteConfig config;
  config.alpha = 1.5;
  CHECK_THROWS_AS(run_named_test(TestId::Frequency, alternating(10), config), drt::ConfigError);
}

TEST_CASE("helpers") {
  CHECK(aperiodic_templates(9).size() == 148);
  CHECK(aperiodic_templates(2) == std::vector<unsigned>{1, 2});
  // x^3 + x + 1 LFSR: linear complexity 3
  Bits seq = {1, 0, 0};
  for (std::size_t i = 3; i < 200; ++i) seq.push_back(seq[i - 3] ^ seq[i - 2]);
  CHECK(tests::berlekamp_massey(seq) == 3);
  CHECK(tests::berlekamp_massey(Bits(300, 0)) == 0);
  Bits impulse(500, 0);
  impulse.back() = 1;
  CHECK(tests::berlekamp_massey(impulse) == 500);

  std::vector<std::uint32_t> identity(32);
  for (unsigned i = 0; i < 32; ++i) identity[i] = 1u << i;
  CHECK(tests::rank32(identity) == 32);
  identity[5] = identity[6];
  CHECK(tests::rank32(identity) == 31);
}

TEST_CASE("bit order round trip and partition") {
  std::mt19937 rng(7);
  std::vector<std::uint8_t> bytes(4096);
  for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
  const BitStream s(bytes);
  CHECK(s.to_bytes() == bytes);
  CHECK(BitStream::from_bits(s.bits(0, s.total_bits())).to_bytes() == bytes);
  CHECK(s.bit(0) == ((bytes[0] >> 7) & 1));

  SuiteConfig config;
  config.sequence_length = 1 << 20;
  CHECK(sequence_count(std::size_t{1} << 30, config) == 1024);
  config.sequence_length = 1'000'000;
  CHECK(sequence_count(67108864, config) == 67);
  CHECK(sequence_count(1'000'000, config) == 1);
  config.max_sequences = 10;
  CHECK(sequence_count(67108864, config) == 10);

  config = SuiteConfig{};
  config.sequence_length = 1000;
  CHECK(partition(s, config).size() == 32);
  CHECK(partition(s, config)[1] == s.bits(1000, 1000));
  config.sequence_length = 40000;
  CHECK_THROWS_AS(partition(s, config), drt::ParameterError);

  MemorySource src(bytes);
  SequenceReader reader(src, 1000);
  Bits seq;
  std::size_t count = 0;
  while (reader.next(seq)) {
    CHECK(seq == s.bits(count * 1000, 1000));
    ++count;
  }
  CHECK(count == 32);
}

TEST_CASE("classification examples") {
  SuiteConfig config;
  const auto [lo, hi] = proportion_interval(0.01, 100);
  CHECK(lo == doctest::Approx(0.99 - 3.0 * std::sqrt(0.0099 / 100)));
  CHECK(lo == doctest::Approx(0.9602).epsilon(1e-4));
  CHECK(hi > 1.0);

  std::vector<double> zeros(100, 0.0);
  const auto z = classify_sub_item(zeros, config);
  CHECK(z.status == SubItemStatus::Fail);
  CHECK(z.proportion == 0.0);
  CHECK(z.uniformity_p < 1e-4);

  std::vector<double> even;
  for (int i = 0; i < 100; ++i) even.push_back((i + 0.5) / 100.0);
  const auto e = classify_sub_item(even, config);
  CHECK(e.status == SubItemStatus::Pass);
  CHECK(e.pass_count == 99);
  CHECK(e.uniformity_p == doctest::Approx(1.0));

  // 93 passing, the rest below alpha: proportion fails, uniformity alone would not
  std::vector<double> mostly;
  for (int i = 0; i < 93; ++i) mostly.push_back((i + 0.5) / 93.0 * 0.99 + 0.01);
  for (int i = 0; i < 7; ++i) mostly.push_back(0.001);
  const auto m = classify_sub_item(mostly, config);
  CHECK(m.proportion == doctest::Approx(0.93));
  CHECK(m.status == SubItemStatus::Fail);

  CHECK(classify_sub_item({}, config).status == SubItemStatus::NotApplicable);
}

TEST_CASE("accumulator and fault record") {
  SuiteConfig config;
  config.tests = {TestId::Fft, TestId::NonOverlappingTemplate, TestId::RandomExcursionsVariant};
  SuiteAccumulator acc(config);
  for (int s = 0; s < 100; ++s) {
    const double good = (s + 0.5) / 100.0;
    std::vector<double> nt(148, good);
    nt[3] = 0.0;
    nt[70] = 0.0;
    acc.add({TestResult{TestId::Fft, true, {}, {0.0}}, TestResult{TestId::NonOverlappingTemplate, true, {}, nt},
             TestResult{TestId::RandomExcursionsVariant, false, "too few cycles", {}}});
  }
  const auto outcomes = acc.classify();
  REQUIRE(outcomes.size() == 3);
  CHECK(outcomes[2].sub_items.size() == 18);
  CHECK(outcomes[2].sub_items[0].status == SubItemStatus::NotApplicable);
  const auto record = fault_record(outcomes);
  REQUIRE(record.faults.size() == 2);
  CHECK(record.faults[0] == std::pair{TestId::Fft, 1u});
  CHECK(record.faults[1] == std::pair{TestId::NonOverlappingTemplate, 2u});
  CHECK(record.fault_total == 3);

  TestOutcome rev{TestId::RandomExcursionsVariant, {}, 1};
  const auto r1 = fault_record({rev});
  CHECK(r1.fault_total == 1);
  CHECK(fault_record({}).fault_total == 0);
  CHECK(fault_record({}).faults.empty());

  CHECK_THROWS_AS(acc.add({TestResult{TestId::Fft, true, {}, {0.1, 0.2}}}), drt::ParameterError);
}

TEST_CASE("determinism across chunking") {
  const auto bytes = read_file(std::string(DRT_TEST_DATA) + "/sts/hc128_1e6.bin");
  SuiteConfig config;
  config.sequence_length = 250'000;
  config.tests = {TestId::Frequency, TestId::Runs, TestId::Fft, TestId::Serial};
  auto run = [&](std::size_t chunk) {
    struct Chunked : ByteSource {
      std::span<const std::uint8_t> data;
      std::size_t chunk, pos = 0;
      std::size_t read(std::span<std::uint8_t> out) override {
        const std::size_t n = std::min({out.size(), chunk, data.size() - pos});
        std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(pos), n, out.begin());
        pos += n;
        return n;
      }
    } src;
    src.data = bytes;
    src.chunk = chunk;
    SequenceReader reader(src, config.sequence_length);
    std::vector<std::vector<TestResult>> all;
    Bits seq;
    while (reader.next(seq)) all.push_back(run_suite(seq, config));
    return all;
  };
  const auto a = run(1), b = run(7777), c = run(1 << 20);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      CHECK(a[i][j].p_values == b[i][j].p_values);
      CHECK(a[i][j].p_values == c[i][j].p_values);
    }
  }
}
