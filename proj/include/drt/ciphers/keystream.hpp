#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "drt/ciphers/variant.hpp"

namespace drt::ciphers {

/// Sequential keystream source. One instance owns its cipher state and is
/// not shared between threads.
class KeystreamGenerator {
 public:
  virtual ~KeystreamGenerator() = default;
  /// Appends the next out.size() keystream bytes; consecutive calls continue
  /// the same stream regardless of how it is chunked.
  virtual void generate(std::span<std::uint8_t> out) = 0;
};

/// Shared byte buffering for generators that emit fixed-size blocks.
template <std::size_t BlockBytes>
class BlockKeystream : public KeystreamGenerator {
 public:
  void generate(std::span<std::uint8_t> out) final {
    std::size_t pos = 0;
    while (pos < out.size() && used_ < BlockBytes) {
      out[pos++] = block_[used_++];
    }
    while (out.size() - pos >= BlockBytes) {
      next_block(out.subspan(pos, BlockBytes));
      pos += BlockBytes;
    }
    if (pos < out.size()) {
      next_block(block_);
      used_ = 0;
      while (pos < out.size()) {
        out[pos++] = block_[used_++];
      }
    }
  }

 protected:
  virtual void next_block(std::span<std::uint8_t> out) = 0;

 private:
  std::array<std::uint8_t, BlockBytes> block_{};
  std::size_t used_ = BlockBytes;
};

class Hc128 final : public BlockKeystream<4> {
 public:
  Hc128(const CipherVariant& variant, std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);

  std::uint32_t next_word() noexcept;

 protected:
  void next_block(std::span<std::uint8_t> out) override;

 private:
  std::uint32_t f1(std::uint32_t x) const noexcept;
  std::uint32_t f2(std::uint32_t x) const noexcept;
  std::uint32_t g1(std::uint32_t x, std::uint32_t y, std::uint32_t z) const noexcept;
  std::uint32_t g2(std::uint32_t x, std::uint32_t y, std::uint32_t z) const noexcept;
  std::uint32_t h1(std::uint32_t x) const noexcept;
  std::uint32_t h2(std::uint32_t x) const noexcept;

  std::array<SiteOp, 10> ops_;
  std::array<std::uint32_t, 512> p_{};
  std::array<std::uint32_t, 512> q_{};
  std::uint32_t step_ = 0;
};

class Rabbit final : public BlockKeystream<16> {
 public:
  /// An empty iv skips iv setup (key-only mode of the reference).
  Rabbit(const CipherVariant& variant, std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);

 protected:
  void next_block(std::span<std::uint8_t> out) override;

 private:
  void next_state() noexcept;

  std::array<SiteOp, 4> ops_;
  std::array<std::uint32_t, 8> x_{};
  std::array<std::uint32_t, 8> c_{};
  std::uint32_t carry_ = 0;
};

class Salsa20 final : public BlockKeystream<64> {
 public:
  /// 128-bit key, 64-bit nonce.
  Salsa20(const CipherVariant& variant, std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);

 protected:
  void next_block(std::span<std::uint8_t> out) override;

 private:
  std::array<SiteOp, 4> ops_;
  std::array<std::uint32_t, 16> input_{};
};

/// Validates lengths and builds the generator for the variant's cipher.
std::unique_ptr<KeystreamGenerator> make_generator(const CipherVariant& variant, const KeyIv& kiv);

/// First `length` keystream bytes. Throws ParameterError when length is 0.
std::vector<std::uint8_t> keystream(const CipherVariant& variant, const KeyIv& kiv, std::size_t length);

}  // namespace drt::ciphers
