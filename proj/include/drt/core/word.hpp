#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace drt {

/// An n-bit word stored in the low bits of a 64-bit integer; bit 0 is the
/// least significant bit (x_0).
using Word = std::uint64_t;

/// Operand width n = 2^m, m in [3, 6].
class WordSpec {
 public:
  static constexpr unsigned kMinExponent = 3;
  static constexpr unsigned kMaxExponent = 6;

  static WordSpec from_exponent(unsigned m);
  static WordSpec from_width(unsigned n);

  [[nodiscard]] constexpr unsigned m() const noexcept { return m_; }
  [[nodiscard]] constexpr unsigned n() const noexcept { return 1u << m_; }
  [[nodiscard]] constexpr Word mask() const noexcept {
    return n() == 64 ? ~Word{0} : (Word{1} << n()) - 1;
  }
  [[nodiscard]] constexpr bool contains(Word x) const noexcept { return (x & ~mask()) == 0; }

  /// Throws ParameterError when x has bits at or above n.
  void check(Word x) const;

  friend constexpr bool operator==(WordSpec, WordSpec) = default;

 private:
  constexpr explicit WordSpec(unsigned m) : m_(m) {}
  unsigned m_;
};

/// DRT shift parameters (a, b). A checked pair satisfies a, b >= 1 and
/// a + b = 2^k with 2 <= k <= m - 1. Unchecked pairs skip validation and only
/// need a, b <= n so the shifts are well defined.
class ShiftPair {
 public:
  static ShiftPair make(unsigned a, unsigned b, WordSpec spec);
  static ShiftPair unchecked(unsigned a, unsigned b);

  /// Empty when a valid pair can be built, otherwise the violated constraint.
  static std::optional<std::string> violation(unsigned a, unsigned b, WordSpec spec);

  [[nodiscard]] unsigned a() const noexcept { return a_; }
  [[nodiscard]] unsigned b() const noexcept { return b_; }
  [[nodiscard]] bool is_checked() const noexcept { return checked_; }
  /// k with a + b = 2^k, when a + b is a power of two.
  [[nodiscard]] std::optional<unsigned> k() const noexcept;

  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;

 private:
  ShiftPair(unsigned a, unsigned b, bool checked) : a_(a), b_(b), checked_(checked) {}
  unsigned a_;
  unsigned b_;
  bool checked_;
};

std::string to_hex(Word x, WordSpec spec);
/// Parses up to n/4 hex digits (optional 0x prefix). Throws ParameterError.
Word parse_hex_word(const std::string& text, WordSpec spec);

}  // namespace drt
