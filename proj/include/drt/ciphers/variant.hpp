#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drt/core/word.hpp"

namespace drt::ciphers {

enum class CipherId { Hc128, Rabbit, Salsa20 };

inline constexpr CipherId kAllCiphers[] = {CipherId::Hc128, CipherId::Rabbit, CipherId::Salsa20};

std::string_view cipher_name(CipherId id) noexcept;
/// Accepts "hc128", "hc-128", "rabbit", "salsa20" (case-insensitive).
CipherId parse_cipher(std::string_view text);

enum class Direction { Left, Right };

/// A rotation site in a cipher's reference definition.
struct SiteInfo {
  std::string_view label;
  Direction direction;
  unsigned reference_rotation;
};

/// Canonical site order per cipher.
///   HC-128:  f1 {7, 18}, f2 {17, 19} (right), g1 {23, 10, 8} (right), g2 {23, 10, 8} (left)
///   Rabbit:  next-state {16, 16, 8}, key setup {16} (left)
///   Salsa20: quarter-round {7, 9, 13, 18} (left)
std::span<const SiteInfo> sites(CipherId id) noexcept;

/// Word operation bound to a site: (x << left) ^ (x >> right) on 32 bits.
struct SiteOp {
  unsigned left = 0;
  unsigned right = 32;

  [[nodiscard]] constexpr std::uint32_t operator()(std::uint32_t x) const noexcept {
    const std::uint64_t w = x;
    return static_cast<std::uint32_t>((w << left) ^ (w >> right));
  }
};

/// Per-site choice between the reference rotation and a DRT replacement.
class MixStrategy {
 public:
  static MixStrategy rot(unsigned c);
  static MixStrategy drt(unsigned a, unsigned b);

  [[nodiscard]] bool is_rot() const noexcept { return rot_; }
  [[nodiscard]] unsigned rotation() const noexcept { return first_; }
  [[nodiscard]] unsigned a() const noexcept { return first_; }
  [[nodiscard]] unsigned b() const noexcept { return second_; }

  /// ROT rotates in the site's direction; DRT is applied as written, (x << a) ^ (x >> b).
  [[nodiscard]] SiteOp bind(Direction dir) const noexcept;
  [[nodiscard]] std::string name() const;

  friend bool operator==(const MixStrategy&, const MixStrategy&) = default;

 private:
  MixStrategy(bool rot, unsigned first, unsigned second) : rot_(rot), first_(first), second_(second) {}
  bool rot_;
  unsigned first_;
  unsigned second_;
};

struct CipherVariant {
  CipherId cipher;
  std::vector<MixStrategy> sites;

  /// "rot" when every site is the reference rotation, "drt" when it matches
  /// drt_variant, "custom" otherwise.
  [[nodiscard]] std::string tag() const;
  /// Throws ParameterError when the site count does not match the cipher.
  void validate() const;
  [[nodiscard]] std::vector<SiteOp> bind() const;

  friend bool operator==(const CipherVariant&, const CipherVariant&) = default;
};

CipherVariant standard_variant(CipherId id);
CipherVariant drt_variant(CipherId id);

struct KeyIv {
  std::vector<std::uint8_t> key;
  std::vector<std::uint8_t> iv;
};

std::size_t key_length(CipherId id) noexcept;
std::size_t iv_length(CipherId id) noexcept;
/// Throws ParameterError on a key or iv of the wrong length.
void validate(CipherId id, const KeyIv& kiv);

}  // namespace drt::ciphers
