#pragma once

#include <string>
#include <variant>

#include "drt/core/word.hpp"

namespace drt {

/// Left rotation by c, 0 <= c < n.
Word rot_left(Word x, unsigned c, WordSpec spec);
/// Right rotation by c, 0 <= c < n.
Word rot_right(Word x, unsigned c, WordSpec spec);

/// Disperse rotation: (x << a) ^ (x >> b) with logical, zero-filling shifts.
/// Output bit i is x_{i-a} ^ x_{i+b}, each term present only when its index
/// lies inside the word.
Word drt(Word x, const ShiftPair& p, WordSpec spec);

namespace detail {

// Shifts that accept amounts up to and including 64.
constexpr Word shl(Word x, unsigned s) noexcept { return s >= 64 ? 0 : x << s; }
constexpr Word shr(Word x, unsigned s) noexcept { return s >= 64 ? 0 : x >> s; }

}  // namespace detail

struct RotMap {
  unsigned c;
  friend bool operator==(const RotMap&, const RotMap&) = default;
};

struct DrtMap {
  ShiftPair pair;
  friend bool operator==(const DrtMap&, const DrtMap&) = default;
};

/// A word map over GF(2)^n: either ROT(c) (left rotation) or DRT(a, b).
class MapDescriptor {
 public:
  static MapDescriptor rot(unsigned c, WordSpec spec);
  static MapDescriptor drt(const ShiftPair& pair, WordSpec spec);

  [[nodiscard]] WordSpec spec() const noexcept { return spec_; }
  [[nodiscard]] bool is_rot() const noexcept { return std::holds_alternative<RotMap>(map_); }
  [[nodiscard]] const std::variant<RotMap, DrtMap>& map() const noexcept { return map_; }

  /// Equivalent (left, right) shift pair: ROT(c) is (c, n - c).
  [[nodiscard]] unsigned left_shift() const noexcept { return left_; }
  [[nodiscard]] unsigned right_shift() const noexcept { return right_; }

  [[nodiscard]] Word apply(Word x) const noexcept {
    return (detail::shl(x, left_) ^ detail::shr(x, right_)) & spec_.mask();
  }

  /// "ROT(c)" or "DRT(a,b)".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const MapDescriptor&, const MapDescriptor&) = default;

 private:
  MapDescriptor(WordSpec spec, std::variant<RotMap, DrtMap> map, unsigned left, unsigned right)
      : spec_(spec), map_(map), left_(left), right_(right) {}

  WordSpec spec_;
  std::variant<RotMap, DrtMap> map_;
  unsigned left_;
  unsigned right_;
};

}  // namespace drt
