#include <algorithm>

#include "drt/ciphers/keystream.hpp"
#include "drt/errors.hpp"

namespace drt::ciphers {

namespace {

std::uint32_t load_le(const std::uint8_t* p) noexcept {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

constexpr std::uint8_t kTau[] = "expand 16-byte k";

}  // namespace

Salsa20::Salsa20(const CipherVariant& variant, std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  if (variant.cipher != CipherId::Salsa20) throw ParameterError("variant is not a salsa20 variant");
  validate(CipherId::Salsa20, KeyIv{{key.begin(), key.end()}, {iv.begin(), iv.end()}});
  const auto ops = variant.bind();
  std::copy(ops.begin(), ops.end(), ops_.begin());

  for (unsigned i = 0; i < 4; ++i) {
    input_[5 * i] = load_le(kTau + 4 * i);
    input_[1 + i] = input_[11 + i] = load_le(key.data() + 4 * i);
  }
  input_[6] = load_le(iv.data());
  input_[7] = load_le(iv.data() + 4);
  input_[8] = input_[9] = 0;
}

void Salsa20::next_block(std::span<std::uint8_t> out) {
  std::array<std::uint32_t, 16> x = input_;
  const SiteOp r7 = ops_[0], r9 = ops_[1], r13 = ops_[2], r18 = ops_[3];
  auto qr = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    x[b] ^= r7(x[a] + x[d]);
    x[c] ^= r9(x[b] + x[a]);
    x[d] ^= r13(x[c] + x[b]);
    x[a] ^= r18(x[d] + x[c]);
  };
  for (int round = 0; round < 10; ++round) {
    qr(0, 4, 8, 12);
    qr(5, 9, 13, 1);
    qr(10, 14, 2, 6);
    qr(15, 3, 7, 11);
    qr(0, 1, 2, 3);
    qr(5, 6, 7, 4);
    qr(10, 11, 8, 9);
    qr(15, 12, 13, 14);
  }
  for (unsigned i = 0; i < 16; ++i) {
    const std::uint32_t w = x[i] + input_[i];
    out[4 * i] = static_cast<std::uint8_t>(w);
    out[4 * i + 1] = static_cast<std::uint8_t>(w >> 8);
    out[4 * i + 2] = static_cast<std::uint8_t>(w >> 16);
    out[4 * i + 3] = static_cast<std::uint8_t>(w >> 24);
  }
  if (++input_[8] == 0) ++input_[9];
}

}  // namespace drt::ciphers
