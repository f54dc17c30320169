#include "drt/core/word.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "drt/errors.hpp"

namespace drt {

WordSpec WordSpec::from_exponent(unsigned m) {
  if (m < kMinExponent || m > kMaxExponent) {
    throw ParameterError("word exponent m must lie in [3, 6], got " + std::to_string(m));
  }
  return WordSpec(m);
}

WordSpec WordSpec::from_width(unsigned n) {
  if (!std::has_single_bit(n) || n < 8 || n > 64) {
    throw ParameterError("word width must be one of 8, 16, 32, 64, got " + std::to_string(n));
  }
  return WordSpec(static_cast<unsigned>(std::countr_zero(n)));
}

void WordSpec::check(Word x) const {
  if (!contains(x)) {
    throw ParameterError("value does not fit in " + std::to_string(n()) + " bits");
  }
}

std::optional<std::string> ShiftPair::violation(unsigned a, unsigned b, WordSpec spec) {
  if (a < 1 || b < 1) {
    return "a and b must both be at least 1";
  }
  const unsigned sum = a + b;
  if (!std::has_single_bit(sum) || sum < 4 || sum >= spec.n()) {
    return "a + b must equal 2^k < n with 2 <= k <= m - 1 (a + b = " + std::to_string(sum) +
           ", n = " + std::to_string(spec.n()) + ")";
  }
  return std::nullopt;
}

ShiftPair ShiftPair::make(unsigned a, unsigned b, WordSpec spec) {
  if (auto why = violation(a, b, spec)) {
    throw ParameterError(*why);
  }
  return ShiftPair(a, b, true);
}

ShiftPair ShiftPair::unchecked(unsigned a, unsigned b) { return ShiftPair(a, b, false); }

std::optional<unsigned> ShiftPair::k() const noexcept {
  const unsigned sum = a_ + b_;
  if (!std::has_single_bit(sum)) {
    return std::nullopt;
  }
  return static_cast<unsigned>(std::countr_zero(sum));
}

std::string to_hex(Word x, WordSpec spec) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned digits = spec.n() / 4;
  std::string out(digits, '0');
  for (unsigned i = 0; i < digits; ++i) {
    out[digits - 1 - i] = kDigits[(x >> (4 * i)) & 0xF];
  }
  return out;
}

Word parse_hex_word(const std::string& text, WordSpec spec) {
  std::string_view s = text;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
  }
  if (s.empty() || s.size() > spec.n() / 4) {
    throw ParameterError("expected 1 to " + std::to_string(spec.n() / 4) + " hex digits, got '" +
                         text + "'");
  }
  Word value = 0;
  for (char c : s) {
    int digit = 0;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      throw ParameterError("invalid hex digit in '" + text + "'");
    }
    value = (value << 4) | static_cast<Word>(digit);
  }
  return value;
}

}  // namespace drt
