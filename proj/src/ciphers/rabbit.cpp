#include <algorithm>

#include "drt/ciphers/keystream.hpp"
#include "drt/errors.hpp"

namespace drt::ciphers {

namespace {

constexpr std::uint32_t kA[8] = {0x4D34D34D, 0xD34D34D3, 0x34D34D34, 0x4D34D34D,
                                 0xD34D34D3, 0x34D34D34, 0x4D34D34D, 0xD34D34D3};

std::uint32_t load_le(const std::uint8_t* p) noexcept {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

void store_le(std::uint8_t* p, std::uint32_t w) noexcept {
  p[0] = static_cast<std::uint8_t>(w);
  p[1] = static_cast<std::uint8_t>(w >> 8);
  p[2] = static_cast<std::uint8_t>(w >> 16);
  p[3] = static_cast<std::uint8_t>(w >> 24);
}

inline std::uint32_t g_func(std::uint32_t u) noexcept {
  const std::uint64_t sq = std::uint64_t{u} * u;
  return static_cast<std::uint32_t>(sq ^ (sq >> 32));
}

}  // namespace

Rabbit::Rabbit(const CipherVariant& variant, std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  if (variant.cipher != CipherId::Rabbit) throw ParameterError("variant is not a rabbit variant");
  if (key.size() != 16) throw ParameterError("rabbit key must be 16 bytes, got " + std::to_string(key.size()));
  if (!iv.empty() && iv.size() != 8) {
    throw ParameterError("rabbit iv must be 8 bytes, got " + std::to_string(iv.size()));
  }
  const auto ops = variant.bind();
  std::copy(ops.begin(), ops.end(), ops_.begin());

  std::uint32_t k[4];
  for (unsigned i = 0; i < 4; ++i) k[i] = load_le(key.data() + 4 * i);
  for (unsigned j = 0; j < 4; ++j) {
    x_[2 * j] = k[j];
    x_[2 * j + 1] = (k[(j + 3) & 3] << 16) | (k[(j + 2) & 3] >> 16);
    c_[2 * j] = ops_[3](k[(j + 2) & 3]);
    c_[2 * j + 1] = (k[j] & 0xFFFF0000u) | (k[(j + 1) & 3] & 0xFFFFu);
  }
  carry_ = 0;
  for (int i = 0; i < 4; ++i) next_state();
  for (unsigned j = 0; j < 8; ++j) c_[j] ^= x_[(j + 4) & 7];

  if (!iv.empty()) {
    const std::uint32_t i0 = load_le(iv.data());
    const std::uint32_t i2 = load_le(iv.data() + 4);
    const std::uint32_t i1 = (i0 >> 16) | (i2 & 0xFFFF0000u);
    const std::uint32_t i3 = (i2 << 16) | (i0 & 0xFFFFu);
    const std::uint32_t ivw[4] = {i0, i1, i2, i3};
    for (unsigned j = 0; j < 8; ++j) c_[j] ^= ivw[j & 3];
    for (int i = 0; i < 4; ++i) next_state();
  }
}

void Rabbit::next_state() noexcept {
  for (unsigned j = 0; j < 8; ++j) {
    const std::uint64_t t = std::uint64_t{c_[j]} + kA[j] + carry_;
    carry_ = static_cast<std::uint32_t>(t >> 32);
    c_[j] = static_cast<std::uint32_t>(t);
  }
  std::uint32_t g[8];
  for (unsigned j = 0; j < 8; ++j) g[j] = g_func(x_[j] + c_[j]);

  const SiteOp e1 = ops_[0], e2 = ops_[1], od = ops_[2];
  x_[0] = g[0] + e1(g[7]) + e2(g[6]);
  x_[1] = g[1] + od(g[0]) + g[7];
  x_[2] = g[2] + e1(g[1]) + e2(g[0]);
  x_[3] = g[3] + od(g[2]) + g[1];
  x_[4] = g[4] + e1(g[3]) + e2(g[2]);
  x_[5] = g[5] + od(g[4]) + g[3];
  x_[6] = g[6] + e1(g[5]) + e2(g[4]);
  x_[7] = g[7] + od(g[6]) + g[5];
}

void Rabbit::next_block(std::span<std::uint8_t> out) {
  next_state();
  store_le(out.data() + 0, x_[0] ^ (x_[5] >> 16) ^ (x_[3] << 16));
  store_le(out.data() + 4, x_[2] ^ (x_[7] >> 16) ^ (x_[5] << 16));
  store_le(out.data() + 8, x_[4] ^ (x_[1] >> 16) ^ (x_[7] << 16));
  store_le(out.data() + 12, x_[6] ^ (x_[3] >> 16) ^ (x_[1] << 16));
}

}  // namespace drt::ciphers
