#include <algorithm>
#include <vector>

#include "drt/ciphers/keystream.hpp"
#include "drt/errors.hpp"

namespace drt::ciphers {

namespace {

std::uint32_t load_le(const std::uint8_t* p) noexcept {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

}  // namespace

// site indices: f1 {0,1}, f2 {2,3}, g1 {z 4, x 5, y 6}, g2 {z 7, x 8, y 9}
std::uint32_t Hc128::f1(std::uint32_t x) const noexcept { return ops_[0](x) ^ ops_[1](x) ^ (x >> 3); }
std::uint32_t Hc128::f2(std::uint32_t x) const noexcept { return ops_[2](x) ^ ops_[3](x) ^ (x >> 10); }

std::uint32_t Hc128::g1(std::uint32_t x, std::uint32_t y, std::uint32_t z) const noexcept {
  return (ops_[5](x) ^ ops_[4](z)) + ops_[6](y);
}

std::uint32_t Hc128::g2(std::uint32_t x, std::uint32_t y, std::uint32_t z) const noexcept {
  return (ops_[8](x) ^ ops_[7](z)) + ops_[9](y);
}

std::uint32_t Hc128::h1(std::uint32_t x) const noexcept { return q_[x & 0xFF] + q_[256 + ((x >> 16) & 0xFF)]; }
std::uint32_t Hc128::h2(std::uint32_t x) const noexcept { return p_[x & 0xFF] + p_[256 + ((x >> 16) & 0xFF)]; }

Hc128::Hc128(const CipherVariant& variant, std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  if (variant.cipher != CipherId::Hc128) throw ParameterError("variant is not an hc128 variant");
  validate(CipherId::Hc128, KeyIv{{key.begin(), key.end()}, {iv.begin(), iv.end()}});
  const auto ops = variant.bind();
  std::copy(ops.begin(), ops.end(), ops_.begin());

  std::vector<std::uint32_t> w(1280);
  for (unsigned i = 0; i < 4; ++i) {
    w[i] = w[i + 4] = load_le(key.data() + 4 * i);
    w[i + 8] = w[i + 12] = load_le(iv.data() + 4 * i);
  }
  for (unsigned i = 16; i < 1280; ++i) {
    w[i] = f2(w[i - 2]) + w[i - 7] + f1(w[i - 15]) + w[i - 16] + i;
  }
  std::copy(w.begin() + 256, w.begin() + 768, p_.begin());
  std::copy(w.begin() + 768, w.end(), q_.begin());

  for (unsigned i = 0; i < 512; ++i) {
    p_[i] = (p_[i] + g1(p_[(i - 3) & 511], p_[(i - 10) & 511], p_[(i - 511) & 511])) ^ h1(p_[(i - 12) & 511]);
  }
  for (unsigned i = 0; i < 512; ++i) {
    q_[i] = (q_[i] + g2(q_[(i - 3) & 511], q_[(i - 10) & 511], q_[(i - 511) & 511])) ^ h2(q_[(i - 12) & 511]);
  }
}

std::uint32_t Hc128::next_word() noexcept {
  const unsigned j = step_ & 511;
  std::uint32_t out;
  if ((step_ & 1023) < 512) {
    p_[j] += g1(p_[(j - 3) & 511], p_[(j - 10) & 511], p_[(j - 511) & 511]);
    out = h1(p_[(j - 12) & 511]) ^ p_[j];
  } else {
    q_[j] += g2(q_[(j - 3) & 511], q_[(j - 10) & 511], q_[(j - 511) & 511]);
    out = h2(q_[(j - 12) & 511]) ^ q_[j];
  }
  step_ = (step_ + 1) & 1023;
  return out;
}

void Hc128::next_block(std::span<std::uint8_t> out) {
  const std::uint32_t w = next_word();
  out[0] = static_cast<std::uint8_t>(w);
  out[1] = static_cast<std::uint8_t>(w >> 8);
  out[2] = static_cast<std::uint8_t>(w >> 16);
  out[3] = static_cast<std::uint8_t>(w >> 24);
}

}  // namespace drt::ciphers
