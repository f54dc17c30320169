#include "drt/sts/tests.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>

#include "drt/errors.hpp"
#include "drt/sts/special.hpp"

namespace drt::sts {

namespace {

using Span = std::span<const std::uint8_t>;

TestResult ok(TestId id, std::vector<double> p) { return TestResult{id, true, {}, std::move(p)}; }
TestResult not_applicable(TestId id, std::string why) { return TestResult{id, false, std::move(why), {}}; }

}  // namespace

namespace tests {

TestResult frequency(Span bits) {
  const double n = static_cast<double>(bits.size());
  long long sum = 0;
  for (auto b : bits) sum += b ? 1 : -1;
  const double s_obs = std::fabs(static_cast<double>(sum)) / std::sqrt(n);
  return ok(TestId::Frequency, {erfc(s_obs / std::sqrt(2.0))});
}

TestResult block_frequency(Span bits, unsigned m) {
  const std::size_t blocks = bits.size() / m;
  if (blocks == 0) return not_applicable(TestId::BlockFrequency, "sequence shorter than one block");
  double sum = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    unsigned ones = 0;
    for (unsigned j = 0; j < m; ++j) ones += bits[i * m + j];
    const double v = static_cast<double>(ones) / m - 0.5;
    sum += v * v;
  }
  const double chi2 = 4.0 * m * sum;
  return ok(TestId::BlockFrequency, {igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0)});
}

TestResult runs(Span bits) {
  const std::size_t n = bits.size();
  std::size_t ones = 0;
  for (auto b : bits) ones += b;
  const double pi = static_cast<double>(ones) / static_cast<double>(n);
  const double dn = static_cast<double>(n);
  // frequency prerequisite failed: the reference reports p = 0
  if (std::fabs(pi - 0.5) > 2.0 / std::sqrt(dn)) return ok(TestId::Runs, {0.0});
  std::size_t v = 1;
  for (std::size_t k = 1; k < n; ++k) v += bits[k] != bits[k - 1];
  const double arg = std::fabs(static_cast<double>(v) - 2.0 * dn * pi * (1.0 - pi)) /
                     (2.0 * pi * (1.0 - pi) * std::sqrt(2.0 * dn));
  return ok(TestId::Runs, {erfc(arg)});
}

TestResult longest_run(Span bits) {
  const std::size_t n = bits.size();
  if (n < 128) return not_applicable(TestId::LongestRun, "needs at least 128 bits");
  unsigned k, m;
  std::array<unsigned, 7> v{};
  std::array<double, 7> pi{};
  if (n < 6272) {
    k = 3;
    m = 8;
    v = {1, 2, 3, 4};
    pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
  } else if (n < 750000) {
    k = 5;
    m = 128;
    v = {4, 5, 6, 7, 8, 9};
    pi = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
  } else {
    k = 6;
    m = 10000;
    v = {10, 11, 12, 13, 14, 15, 16};
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  const std::size_t blocks = n / m;
  std::array<std::size_t, 7> nu{};
  for (std::size_t i = 0; i < blocks; ++i) {
    unsigned longest = 0, run = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (bits[i * m + j]) {
        longest = std::max(longest, ++run);
      } else {
        run = 0;
      }
    }
    if (longest < v[0]) ++nu[0];
    for (unsigned j = 0; j <= k; ++j) {
      if (longest == v[j]) ++nu[j];
    }
    if (longest > v[k]) ++nu[k];
  }
  const double nb = static_cast<double>(blocks);
  double chi2 = 0.0;
  for (unsigned i = 0; i <= k; ++i) {
    const double e = nb * pi[i];
    chi2 += (static_cast<double>(nu[i]) - e) * (static_cast<double>(nu[i]) - e) / e;
  }
  return ok(TestId::LongestRun, {igamc(k / 2.0, chi2 / 2.0)});
}

unsigned rank32(std::span<const std::uint32_t> input) {
  std::array<std::uint32_t, 32> rows{};
  std::copy(input.begin(), input.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(input.size(), 32)),
            rows.begin());
  const std::size_t count = std::min<std::size_t>(input.size(), 32);
  unsigned rank = 0;
  for (int bit = 31; bit >= 0 && rank < count; --bit) {
    const std::uint32_t mask = std::uint32_t{1} << bit;
    std::size_t pivot = rank;
    while (pivot < count && !(rows[pivot] & mask)) ++pivot;
    if (pivot == count) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < count; ++r) {
      if (rows[r] & mask) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

TestResult rank(Span bits) {
  const std::size_t matrices = bits.size() / 1024;
  if (matrices == 0) return not_applicable(TestId::Rank, "fewer than 1024 bits");

  auto prob = [](int r) {
    double product = 1.0;
    for (int i = 0; i <= r - 1; ++i) {
      const double t = 1.0 - std::pow(2.0, i - 32);
      product *= t * t / (1.0 - std::pow(2.0, i - r));
    }
    return std::pow(2.0, r * (32 + 32 - r) - 32 * 32) * product;
  };
  const double p32 = prob(32), p31 = prob(31), p30 = 1.0 - (p32 + p31);

  std::size_t f32 = 0, f31 = 0;
  std::array<std::uint32_t, 32> rows{};
  for (std::size_t k = 0; k < matrices; ++k) {
    const std::uint8_t* base = bits.data() + k * 1024;
    for (unsigned i = 0; i < 32; ++i) {
      std::uint32_t row = 0;
      for (unsigned j = 0; j < 32; ++j) row = (row << 1) | base[i * 32 + j];
      rows[i] = row;
    }
    const unsigned r = rank32(rows);
    if (r == 32) ++f32;
    else if (r == 31) ++f31;
  }
  const double n = static_cast<double>(matrices);
  const double f30 = n - static_cast<double>(f32 + f31);
  const double chi2 = std::pow(static_cast<double>(f32) - n * p32, 2) / (n * p32) +
                      std::pow(static_cast<double>(f31) - n * p31, 2) / (n * p31) +
                      std::pow(f30 - n * p30, 2) / (n * p30);
  return ok(TestId::Rank, {std::exp(-chi2 / 2.0)});
}

TestResult non_overlapping_template(Span bits, unsigned m) {
  constexpr unsigned kBlocks = 8;
  const std::size_t n = bits.size();
  const std::size_t block = n / kBlocks;
  if (block < m) return not_applicable(TestId::NonOverlappingTemplate, "blocks shorter than the template");
  const auto templates = aperiodic_templates(m);

  const double lambda = static_cast<double>(block - m + 1) / std::pow(2.0, m);
  const double var = static_cast<double>(block) * (1.0 / std::pow(2.0, m) - (2.0 * m - 1.0) / std::pow(2.0, 2.0 * m));

  // aperiodic templates never overlap themselves, so non-overlapping matches
  // equal raw window matches and one histogram per block serves every template
  const std::size_t values = std::size_t{1} << m;
  const unsigned mask = static_cast<unsigned>(values - 1);
  std::vector<std::uint32_t> hist(kBlocks * values, 0);
  for (unsigned j = 0; j < kBlocks; ++j) {
    const std::uint8_t* p = bits.data() + j * block;
    std::uint32_t* h = hist.data() + j * values;
    unsigned w = 0;
    for (unsigned i = 0; i + 1 < m; ++i) w = (w << 1) | p[i];
    for (std::size_t i = m - 1; i < block; ++i) {
      w = ((w << 1) | p[i]) & mask;
      ++h[w];
    }
  }

  std::vector<double> out;
  out.reserve(templates.size());
  for (unsigned t : templates) {
    double chi2 = 0.0;
    for (unsigned j = 0; j < kBlocks; ++j) {
      const double d = static_cast<double>(hist[j * values + t]) - lambda;
      chi2 += d * d / var;
    }
    out.push_back(igamc(kBlocks / 2.0, chi2 / 2.0));
  }
  return ok(TestId::NonOverlappingTemplate, std::move(out));
}

namespace {

double overlapping_pr(int u, double eta) {
  if (u == 0) return std::exp(-eta);
  double sum = 0.0;
  for (int l = 1; l <= u; ++l) {
    sum += std::exp(-eta - u * std::log(2.0) + l * std::log(eta) - log_gamma(l + 1.0) + log_gamma(u) -
                    log_gamma(l) - log_gamma(u - l + 1.0));
  }
  return sum;
}

}  // namespace

TestResult overlapping_template(Span bits, unsigned m) {
  constexpr unsigned kBlock = 1032;
  constexpr int kK = 5;
  const std::size_t blocks = bits.size() / kBlock;
  if (blocks == 0) return not_applicable(TestId::OverlappingTemplate, "fewer than 1032 bits");

  const double lambda = static_cast<double>(kBlock - m + 1) / std::pow(2.0, m);
  const double eta = lambda / 2.0;
  std::array<double, kK + 1> pi{};
  double sum = 0.0;
  for (int i = 0; i < kK; ++i) {
    pi[i] = overlapping_pr(i, eta);
    sum += pi[i];
  }
  pi[kK] = 1.0 - sum;

  std::array<std::size_t, kK + 1> nu{};
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::uint8_t* p = bits.data() + i * kBlock;
    unsigned run = 0, hits = 0;
    for (unsigned j = 0; j < kBlock; ++j) {
      run = p[j] ? run + 1 : 0;
      if (run >= m) ++hits;
    }
    ++nu[std::min<unsigned>(hits, kK)];
  }
  const double n = static_cast<double>(blocks);
  double chi2 = 0.0;
  for (int i = 0; i <= kK; ++i) {
    const double e = n * pi[i];
    chi2 += std::pow(static_cast<double>(nu[i]) - e, 2) / e;
  }
  return ok(TestId::OverlappingTemplate, {igamc(kK / 2.0, chi2 / 2.0)});
}

TestResult universal(Span bits, unsigned l) {
  static constexpr double kExpected[17] = {0, 0, 0, 0, 0, 0, 5.2177052, 6.1962507, 7.1836656, 8.1764248,
                                           9.1723243, 10.170032, 11.168765, 12.168070, 13.167693, 14.167488,
                                           15.167379};
  static constexpr double kVariance[17] = {0, 0, 0, 0, 0, 0, 2.954, 3.125, 3.238, 3.311,
                                           3.356, 3.384, 3.401, 3.410, 3.416, 3.419, 3.421};
  const std::size_t n = bits.size();
  if (l == 0) {
    static constexpr std::size_t kThreshold[] = {387840,   904960,   2068480,   4654080,   10342400,  22753280,
                                                 49643520, 107560960, 231669760, 496435200, 1059061760};
    for (unsigned i = 0; i < std::size(kThreshold); ++i) {
      if (n >= kThreshold[i]) l = 6 + i;
    }
    if (l == 0) return not_applicable(TestId::Universal, "needs at least 387840 bits");
  }
  const std::size_t q = 10 * (std::size_t{1} << l);
  if (n / l <= q) return not_applicable(TestId::Universal, "too few blocks for L = " + std::to_string(l));
  const std::size_t k = n / l - q;

  const double c = 0.7 - 0.8 / l + (4.0 + 32.0 / l) * std::pow(static_cast<double>(k), -3.0 / l) / 15.0;
  const double sigma = c * std::sqrt(kVariance[l] / static_cast<double>(k));

  std::vector<std::size_t> last(std::size_t{1} << l, 0);
  auto block_value = [&](std::size_t i) {
    unsigned v = 0;
    const std::uint8_t* p = bits.data() + i * l;
    for (unsigned j = 0; j < l; ++j) v = (v << 1) | p[j];
    return v;
  };
  for (std::size_t i = 1; i <= q; ++i) last[block_value(i - 1)] = i;
  double sum = 0.0;
  for (std::size_t i = q + 1; i <= q + k; ++i) {
    const unsigned v = block_value(i - 1);
    sum += std::log(static_cast<double>(i - last[v])) / std::log(2.0);
    last[v] = i;
  }
  const double phi = sum / static_cast<double>(k);
  const double arg = std::fabs(phi - kExpected[l]) / (std::sqrt(2.0) * sigma);
  return ok(TestId::Universal, {erfc(arg)});
}

unsigned berlekamp_massey(Span bits) {
  const std::size_t n = bits.size();
  const std::size_t words = n / 64 + 2;
  std::vector<std::uint64_t> c(words, 0), b(words, 0), t(words), s(words, 0);
  c[0] = b[0] = 1;
  std::size_t l = 0;
  long long last = -1;
  for (std::size_t k = 0; k < n; ++k) {
    // s holds s_k, s_{k-1}, ... at bits 0, 1, ...
    const std::size_t live = k / 64 + 1;
    for (std::size_t w = std::min(live, words - 1); w > 0; --w) s[w] = (s[w] << 1) | (s[w - 1] >> 63);
    s[0] = (s[0] << 1) | bits[k];

    std::uint64_t acc = 0;
    const std::size_t cw = l / 64 + 1;
    for (std::size_t w = 0; w < cw; ++w) acc ^= c[w] & s[w];
    if (std::popcount(acc) & 1) {
      t = c;
      const std::size_t shift = static_cast<std::size_t>(static_cast<long long>(k) - last);
      const std::size_t ws = shift / 64, bs = shift % 64;
      for (std::size_t w = words; w-- > ws;) {
        const std::size_t src = w - ws;
        std::uint64_t v = b[src] << bs;
        if (bs != 0 && src > 0) v |= b[src - 1] >> (64 - bs);
        c[w] ^= v;
      }
      if (2 * l <= k) {
        l = k + 1 - l;
        last = static_cast<long long>(k);
        b = t;
      }
    }
  }
  return static_cast<unsigned>(l);
}

TestResult linear_complexity(Span bits, unsigned m) {
  static constexpr double kPi[7] = {0.01047, 0.03125, 0.12500, 0.50000, 0.25000, 0.06250, 0.020833};
  const std::size_t blocks = bits.size() / m;
  if (blocks == 0) return not_applicable(TestId::LinearComplexity, "sequence shorter than one block");
  const double sign = (m + 1) % 2 == 0 ? -1.0 : 1.0;
  const double mean = m / 2.0 + (9.0 + sign) / 36.0 - 1.0 / std::pow(2.0, m) * (m / 3.0 + 2.0 / 9.0);

  std::array<std::size_t, 7> nu{};
  for (std::size_t i = 0; i < blocks; ++i) {
    const unsigned l = berlekamp_massey(bits.subspan(i * m, m));
    const double t = sign * (l - mean) + 2.0 / 9.0;
    if (t <= -2.5) ++nu[0];
    else if (t <= -1.5) ++nu[1];
    else if (t <= -0.5) ++nu[2];
    else if (t <= 0.5) ++nu[3];
    else if (t <= 1.5) ++nu[4];
    else if (t <= 2.5) ++nu[5];
    else ++nu[6];
  }
  const double n = static_cast<double>(blocks);
  double chi2 = 0.0;
  for (int i = 0; i < 7; ++i) chi2 += std::pow(static_cast<double>(nu[i]) - n * kPi[i], 2) / (n * kPi[i]);
  return ok(TestId::LinearComplexity, {igamc(3.0, chi2 / 2.0)});
}

namespace {

/// Cyclic pattern counts of length m (first bit most significant).
std::vector<std::uint32_t> cyclic_counts(Span bits, unsigned m) {
  std::vector<std::uint32_t> counts(std::size_t{1} << m, 0);
  const std::size_t n = bits.size();
  if (m == 0) {
    counts[0] = static_cast<std::uint32_t>(n);
    return counts;
  }
  const std::uint32_t mask = static_cast<std::uint32_t>((std::size_t{1} << m) - 1);
  std::uint32_t w = 0;
  for (unsigned i = 0; i + 1 < m; ++i) w = (w << 1) | bits[i % n];
  for (std::size_t i = 0; i < n; ++i) {
    w = ((w << 1) | bits[(i + m - 1) % n]) & mask;
    ++counts[w];
  }
  return counts;
}

std::vector<std::uint32_t> fold(const std::vector<std::uint32_t>& counts) {
  std::vector<std::uint32_t> out(counts.size() / 2);
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = counts[2 * v] + counts[2 * v + 1];
  return out;
}

double psi2(const std::vector<std::uint32_t>& counts, unsigned m, std::size_t n) {
  if (m == 0) return 0.0;
  double sum = 0.0;
  for (auto c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
  return sum * std::pow(2.0, m) / static_cast<double>(n) - static_cast<double>(n);
}

}  // namespace

TestResult serial(Span bits, unsigned m) {
  const std::size_t n = bits.size();
  const auto c0 = cyclic_counts(bits, m);
  const auto c1 = fold(c0);
  const auto c2 = fold(c1);
  const double p0 = psi2(c0, m, n), p1 = psi2(c1, m - 1, n), p2 = psi2(c2, m - 2, n);
  const double del1 = p0 - p1;
  const double del2 = p0 - 2.0 * p1 + p2;
  return ok(TestId::Serial, {igamc(std::pow(2.0, m - 1) / 2.0, del1 / 2.0), igamc(std::pow(2.0, m - 2) / 2.0, del2 / 2.0)});
}

TestResult approximate_entropy(Span bits, unsigned m) {
  const std::size_t n = bits.size();
  const double dn = static_cast<double>(n);
  const auto c1 = cyclic_counts(bits, m + 1);
  const auto c0 = fold(c1);
  auto phi = [dn](const std::vector<std::uint32_t>& counts) {
    double sum = 0.0;
    for (auto c : counts) {
      if (c > 0) sum += c * std::log(c / dn);
    }
    return sum / dn;
  };
  const double ap0 = m == 0 ? 0.0 : phi(c0);
  const double apen = ap0 - phi(c1);
  const double chi2 = 2.0 * dn * (std::log(2.0) - apen);
  return ok(TestId::ApproximateEntropy, {igamc(std::pow(2.0, m - 1.0), chi2 / 2.0)});
}

namespace {

double cusum_p(long long n, long long z) {
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  double sum1 = 0.0;
  for (long long k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k) {
    sum1 += normal_cdf(static_cast<double>((4 * k + 1) * z) / sqrt_n);
    sum1 -= normal_cdf(static_cast<double>((4 * k - 1) * z) / sqrt_n);
  }
  double sum2 = 0.0;
  for (long long k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k) {
    sum2 += normal_cdf(static_cast<double>((4 * k + 3) * z) / sqrt_n);
    sum2 -= normal_cdf(static_cast<double>((4 * k + 1) * z) / sqrt_n);
  }
  return 1.0 - sum1 + sum2;
}

}  // namespace

TestResult cumulative_sums(Span bits) {
  long long s = 0, sup = 0, inf = 0;
  for (auto b : bits) {
    s += b ? 1 : -1;
    sup = std::max(sup, s);
    inf = std::min(inf, s);
  }
  const long long n = static_cast<long long>(bits.size());
  const long long z = std::max(sup, -inf);
  const long long zrev = std::max(sup - s, s - inf);
  return ok(TestId::CumulativeSums, {cusum_p(n, z), cusum_p(n, zrev)});
}

namespace {

struct Walk {
  std::size_t cycles = 0;
  bool overflow = false;
};

double cycle_constraint(std::size_t n) { return std::max(0.005 * std::sqrt(static_cast<double>(n)), 500.0); }

}  // namespace

TestResult random_excursions(Span bits) {
  static constexpr double kPi[5][6] = {
      {0.0000000000, 0.00000000000, 0.00000000000, 0.00000000000, 0.00000000000, 0.0000000000},
      {0.5000000000, 0.25000000000, 0.12500000000, 0.06250000000, 0.03125000000, 0.0312500000},
      {0.7500000000, 0.06250000000, 0.04687500000, 0.03515625000, 0.02636718750, 0.0791015625},
      {0.8333333333, 0.02777777778, 0.02314814815, 0.01929012346, 0.01607510288, 0.0803755143},
      {0.8750000000, 0.01562500000, 0.01367187500, 0.01196289063, 0.01046752930, 0.0732727051}};
  static constexpr int kStates[8] = {-4, -3, -2, -1, 1, 2, 3, 4};

  const std::size_t n = bits.size();
  const std::size_t max_cycles = std::max<std::size_t>(1000, n / 100);
  std::array<std::array<std::size_t, 8>, 6> nu{};
  std::array<std::size_t, 8> counter{};
  std::size_t cycles = 0;
  long long s = 0;
  auto close_cycle = [&] {
    for (int i = 0; i < 8; ++i) ++nu[std::min<std::size_t>(counter[i], 5)][i];
    counter.fill(0);
    ++cycles;
  };
  for (std::size_t i = 0; i < n; ++i) {
    s += bits[i] ? 1 : -1;
    if (s == 0) {
      close_cycle();
      if (cycles > max_cycles) return not_applicable(TestId::RandomExcursions, "exceeds the maximum number of cycles");
    } else if (s >= -4 && s <= 4) {
      ++counter[s < 0 ? s + 4 : s + 3];
    }
  }
  if (s != 0) close_cycle();

  if (static_cast<double>(cycles) < cycle_constraint(n)) {
    return not_applicable(TestId::RandomExcursions, "insufficient number of cycles (" + std::to_string(cycles) + ")");
  }
  std::vector<double> out;
  const double j = static_cast<double>(cycles);
  for (int i = 0; i < 8; ++i) {
    const auto& pi = kPi[std::abs(kStates[i])];
    double chi2 = 0.0;
    for (int k = 0; k < 6; ++k) chi2 += std::pow(static_cast<double>(nu[k][i]) - j * pi[k], 2) / (j * pi[k]);
    out.push_back(igamc(2.5, chi2 / 2.0));
  }
  return ok(TestId::RandomExcursions, std::move(out));
}

TestResult random_excursions_variant(Span bits) {
  const std::size_t n = bits.size();
  std::array<std::size_t, 19> visits{};
  std::size_t cycles = 0;
  long long s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s += bits[i] ? 1 : -1;
    if (s == 0) ++cycles;
    else if (s >= -9 && s <= 9) ++visits[static_cast<std::size_t>(s + 9)];
  }
  if (s != 0) ++cycles;
  if (static_cast<double>(cycles) < cycle_constraint(n)) {
    return not_applicable(TestId::RandomExcursionsVariant,
                          "insufficient number of cycles (" + std::to_string(cycles) + ")");
  }
  std::vector<double> out;
  const double j = static_cast<double>(cycles);
  for (int x = -9; x <= 9; ++x) {
    if (x == 0) continue;
    const double count = static_cast<double>(visits[static_cast<std::size_t>(x + 9)]);
    out.push_back(erfc(std::fabs(count - j) / std::sqrt(2.0 * j * (4.0 * std::abs(x) - 2.0))));
  }
  return ok(TestId::RandomExcursionsVariant, std::move(out));
}

}  // namespace tests

TestResult run_named_test(TestId id, std::span<const std::uint8_t> bits, const SuiteConfig& config) {
  config.validate();
  if (bits.empty()) return not_applicable(id, "empty sequence");
  TestResult r;
  switch (id) {
    case TestId::Frequency: r = tests::frequency(bits); break;
    case TestId::BlockFrequency: r = tests::block_frequency(bits, config.block_frequency_m); break;
    case TestId::Runs: r = tests::runs(bits); break;
    case TestId::LongestRun: r = tests::longest_run(bits); break;
    case TestId::Rank: r = tests::rank(bits); break;
    case TestId::Fft: r = tests::spectral(bits); break;
    case TestId::NonOverlappingTemplate: r = tests::non_overlapping_template(bits, config.non_overlapping_m); break;
    case TestId::OverlappingTemplate: r = tests::overlapping_template(bits, config.overlapping_m); break;
    case TestId::Universal: r = tests::universal(bits, config.universal_l); break;
    case TestId::LinearComplexity: r = tests::linear_complexity(bits, config.linear_complexity_m); break;
    case TestId::Serial: r = tests::serial(bits, config.serial_m); break;
    case TestId::ApproximateEntropy: r = tests::approximate_entropy(bits, config.approximate_entropy_m); break;
    case TestId::CumulativeSums: r = tests::cumulative_sums(bits); break;
    case TestId::RandomExcursions: r = tests::random_excursions(bits); break;
    case TestId::RandomExcursionsVariant: r = tests::random_excursions_variant(bits); break;
  }
  for (double& p : r.p_values) {
    if (std::isnan(p)) p = 0.0;
    p = std::clamp(p, 0.0, 1.0);
  }
  return r;
}

std::vector<TestResult> run_suite(std::span<const std::uint8_t> bits, const SuiteConfig& config) {
  config.validate();
  std::vector<TestId> order = config.tests;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<TestResult> out;
  out.reserve(order.size());
  for (auto id : order) out.push_back(run_named_test(id, bits, config));
  return out;
}

}  // namespace drt::sts
