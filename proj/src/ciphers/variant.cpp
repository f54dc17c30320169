#include "drt/ciphers/variant.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "drt/errors.hpp"

namespace drt::ciphers {

namespace {

constexpr SiteInfo kHc128Sites[] = {
    {"f1.7", Direction::Right, 7},   {"f1.18", Direction::Right, 18}, {"f2.17", Direction::Right, 17},
    {"f2.19", Direction::Right, 19}, {"g1.23", Direction::Right, 23}, {"g1.10", Direction::Right, 10},
    {"g1.8", Direction::Right, 8},   {"g2.23", Direction::Left, 23},  {"g2.10", Direction::Left, 10},
    {"g2.8", Direction::Left, 8},
};

constexpr SiteInfo kRabbitSites[] = {
    {"next.even.g1", Direction::Left, 16},
    {"next.even.g2", Direction::Left, 16},
    {"next.odd", Direction::Left, 8},
    {"keysetup", Direction::Left, 16},
};

constexpr SiteInfo kSalsa20Sites[] = {
    {"qr.7", Direction::Left, 7},
    {"qr.9", Direction::Left, 9},
    {"qr.13", Direction::Left, 13},
    {"qr.18", Direction::Left, 18},
};

struct PairSpec {
  unsigned a, b;
};

constexpr PairSpec kHc128Drt[] = {{4, 4}, {7, 1}, {8, 8}, {15, 1}, {3, 13}, {6, 10}, {2, 6}, {13, 3}, {10, 6}, {6, 2}};
constexpr PairSpec kRabbitDrt[] = {{4, 12}, {11, 5}, {3, 5}, {3, 13}};
constexpr PairSpec kSalsa20Drt[] = {{4, 4}, {6, 2}, {10, 6}, {12, 4}};

std::span<const PairSpec> drt_pairs(CipherId id) noexcept {
  switch (id) {
    case CipherId::Hc128: return kHc128Drt;
    case CipherId::Rabbit: return kRabbitDrt;
    case CipherId::Salsa20: return kSalsa20Drt;
  }
  return {};
}

}  // namespace

std::string_view cipher_name(CipherId id) noexcept {
  switch (id) {
    case CipherId::Hc128: return "hc128";
    case CipherId::Rabbit: return "rabbit";
    case CipherId::Salsa20: return "salsa20";
  }
  return "?";
}

CipherId parse_cipher(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "hc128") return CipherId::Hc128;
  if (s == "rabbit") return CipherId::Rabbit;
  if (s == "salsa20") return CipherId::Salsa20;
  throw ParameterError("unknown cipher '" + std::string(text) + "' (expected hc128, rabbit or salsa20)");
}

std::span<const SiteInfo> sites(CipherId id) noexcept {
  switch (id) {
    case CipherId::Hc128: return kHc128Sites;
    case CipherId::Rabbit: return kRabbitSites;
    case CipherId::Salsa20: return kSalsa20Sites;
  }
  return {};
}

MixStrategy MixStrategy::rot(unsigned c) {
  if (c >= 32) {
    throw ParameterError("rotation amount must lie in [0, 31], got " + std::to_string(c));
  }
  return MixStrategy(true, c, 0);
}

MixStrategy MixStrategy::drt(unsigned a, unsigned b) {
  const ShiftPair p = ShiftPair::make(a, b, WordSpec::from_width(32));
  return MixStrategy(false, p.a(), p.b());
}

SiteOp MixStrategy::bind(Direction dir) const noexcept {
  if (!rot_) {
    return SiteOp{first_, second_};
  }
  if (dir == Direction::Left) {
    return SiteOp{first_, 32 - first_};
  }
  return SiteOp{32 - first_, first_};
}

std::string MixStrategy::name() const {
  if (rot_) return "ROT(" + std::to_string(first_) + ")";
  return "DRT(" + std::to_string(first_) + "," + std::to_string(second_) + ")";
}

std::string CipherVariant::tag() const {
  if (*this == standard_variant(cipher)) return "rot";
  if (*this == drt_variant(cipher)) return "drt";
  return "custom";
}

void CipherVariant::validate() const {
  const auto expected = ciphers::sites(cipher).size();
  if (sites.size() != expected) {
    throw ParameterError(std::string(cipher_name(cipher)) + " expects " + std::to_string(expected) +
                         " rotation sites, got " + std::to_string(sites.size()));
  }
}

std::vector<SiteOp> CipherVariant::bind() const {
  validate();
  const auto info = ciphers::sites(cipher);
  std::vector<SiteOp> ops;
  ops.reserve(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    ops.push_back(sites[i].bind(info[i].direction));
  }
  return ops;
}

CipherVariant standard_variant(CipherId id) {
  CipherVariant v{id, {}};
  for (const auto& s : sites(id)) v.sites.push_back(MixStrategy::rot(s.reference_rotation));
  return v;
}

CipherVariant drt_variant(CipherId id) {
  CipherVariant v{id, {}};
  for (const auto& p : drt_pairs(id)) v.sites.push_back(MixStrategy::drt(p.a, p.b));
  return v;
}

std::size_t key_length(CipherId) noexcept { return 16; }

std::size_t iv_length(CipherId id) noexcept { return id == CipherId::Hc128 ? 16 : 8; }

void validate(CipherId id, const KeyIv& kiv) {
  if (kiv.key.size() != key_length(id)) {
    throw ParameterError(std::string(cipher_name(id)) + " key must be " + std::to_string(key_length(id)) +
                         " bytes, got " + std::to_string(kiv.key.size()));
  }
  if (kiv.iv.size() != iv_length(id)) {
    throw ParameterError(std::string(cipher_name(id)) + " iv must be " + std::to_string(iv_length(id)) +
                         " bytes, got " + std::to_string(kiv.iv.size()));
  }
}

}  // namespace drt::ciphers
