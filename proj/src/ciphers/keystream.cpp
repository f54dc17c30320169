#include "drt/ciphers/keystream.hpp"

#include "drt/errors.hpp"

namespace drt::ciphers {

std::unique_ptr<KeystreamGenerator> make_generator(const CipherVariant& variant, const KeyIv& kiv) {
  variant.validate();
  validate(variant.cipher, kiv);
  switch (variant.cipher) {
    case CipherId::Hc128: return std::make_unique<Hc128>(variant, kiv.key, kiv.iv);
    case CipherId::Rabbit: return std::make_unique<Rabbit>(variant, kiv.key, kiv.iv);
    case CipherId::Salsa20: return std::make_unique<Salsa20>(variant, kiv.key, kiv.iv);
  }
  throw ParameterError("unknown cipher");
}

std::vector<std::uint8_t> keystream(const CipherVariant& variant, const KeyIv& kiv, std::size_t length) {
  if (length == 0) throw ParameterError("keystream length must be at least 1 byte");
  auto gen = make_generator(variant, kiv);
  std::vector<std::uint8_t> out(length);
  gen->generate(out);
  return out;
}

}  // namespace drt::ciphers
