#include "drt/harness/schedule.hpp"

#include <algorithm>
#include <sstream>

#include "drt/errors.hpp"

namespace drt::harness {

using ciphers::CipherId;

std::string TestCase::id() const { return "m" + std::to_string(method) + "#" + std::to_string(index); }

std::vector<std::pair<unsigned, unsigned>> positions(CipherId id) {
  if (id == CipherId::Hc128) return {{0, 0}, {8, 8}, {15, 15}};
  return {{0, 0}, {8, 4}, {15, 7}};
}

std::vector<TestCase> schedule(int method, CipherId id, const FixtureSet* fixtures) {
  if (method < 1 || method > 5) throw ParameterError("method must be 1-5, got " + std::to_string(method));
  const std::size_t klen = ciphers::key_length(id), ivlen = ciphers::iv_length(id);
  std::vector<TestCase> out;
  out.reserve(kCasesPerMethod);

  if (method == 5) {
    if (fixtures == nullptr) throw ParameterError("method 5 needs the fixture file");
    if (fixtures->entries.size() != kFixtureCount) throw ParameterError("method 5 needs 24 fixtures");
    for (unsigned i = 0; i < kFixtureCount; ++i) {
      const auto& e = fixtures->entries[i];
      TestCase c{id, 5, i, {}, std::nullopt, std::nullopt};
      c.kiv.key.assign(e.key.begin(), e.key.begin() + static_cast<std::ptrdiff_t>(klen));
      c.kiv.iv.assign(e.iv.begin(), e.iv.begin() + static_cast<std::ptrdiff_t>(ivlen));
      out.push_back(std::move(c));
    }
    return out;
  }

  const bool complement = method == 2 || method == 4;
  const std::uint8_t fill = complement ? 0xFF : 0x00;
  const auto pos = positions(id);
  for (unsigned p = 0; p < pos.size(); ++p) {
    const auto [u, v] = pos[p];
    for (unsigned k = 0; k < 8; ++k) {
      TestCase c{id, method, p * 8 + k, {}, std::nullopt, v};
      c.kiv.key.assign(klen, fill);
      c.kiv.iv.assign(ivlen, fill);
      if (method <= 2) {
        c.u = u;
        c.kiv.key[u] = static_cast<std::uint8_t>(kKeyPattern[k] ^ fill);
      }
      c.kiv.iv[v] = static_cast<std::uint8_t>(kIvPattern[k] ^ fill);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<int> parse_methods(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto number = [&](const std::string& s) {
    if (s.size() != 1 || s[0] < '1' || s[0] > '5') throw ParameterError("bad method '" + s + "' (expected 1-5)");
    return s[0] - '0';
  };
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw ParameterError("empty method in '" + text + "'");
    if (const auto dash = part.find('-'); dash != std::string::npos) {
      const int lo = number(part.substr(0, dash)), hi = number(part.substr(dash + 1));
      if (lo > hi) throw ParameterError("bad method range '" + part + "'");
      for (int m = lo; m <= hi; ++m) out.push_back(m);
    } else {
      out.push_back(number(part));
    }
  }
  if (out.empty()) throw ParameterError("no methods given");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace drt::harness
