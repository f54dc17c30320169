#include "drt/ciphers/self_test.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "drt/ciphers/keystream.hpp"
#include "drt/errors.hpp"
#include "drt/hex.hpp"

#ifndef DRT_GOLDEN_DIR
#define DRT_GOLDEN_DIR "tests/data/golden"
#endif

namespace drt::ciphers {

namespace {

struct Kat {
  const char* name;
  CipherId cipher;
  const char* key;
  const char* iv;  // nullptr: Rabbit key-setup only
  std::size_t offset;
  const char* expected;
};

// eSTREAM test vectors, RFC 4503 appendix A, and the HC-128 reference implementation.
constexpr Kat kKats[] = {
    {"hc128 estream set1 v0", CipherId::Hc128, "80000000000000000000000000000000", "00000000000000000000000000000000", 0,
     "378602B98F32A74847515654AE0DE7ED8F72BC34776A065103E51595521FFE47"},
    {"hc128 estream set6 v0", CipherId::Hc128, "0F62B5085BAE0154A7FA4DA0F34699EC", "288FF65DC42B92F960C72E95FC63CA31", 0,
     "1CD8AEDDFE52E217E835D0B7E84E2922D04B1ADBCA53C4522B1AA604C42856A9"},
    {"hc128 estream set6 v0 @65472", CipherId::Hc128, "0F62B5085BAE0154A7FA4DA0F34699EC",
     "288FF65DC42B92F960C72E95FC63CA31", 65472,
     "BB599F93F4F244D717CA9818212B06D56D99AD4CA1F78725DBA89EA1D1F05B27"},
    {"hc128 zero key/iv", CipherId::Hc128, "00000000000000000000000000000000", "00000000000000000000000000000000", 0,
     "82001573a003fd3b7fd72ffb0eaf63aac62f12deb629dca72785a66268ec758b"
     "1edb36900560898178e0ad009abf1f491330dc1c246e3d6cb264f6900271d59c"},
    {"rabbit rfc4503 a.1 key3", CipherId::Rabbit, "ACC351DCF162FC3BFE363D2E29132891", nullptr, 0,
     "9C51E28784C37FE9A127F63EC8F32D3D19FC5485AA53BF96885B40F461CD76F55E4C4D20203BE58A5043DBFB737454E5"},
    {"rabbit rfc4503 a.2 iv0", CipherId::Rabbit, "00000000000000000000000000000000", "0000000000000000", 0,
     "EDB70567375DCD7CD89554F85E27A7C68D4ADC7032298F7BD4EFF504ACA6295F668FBF478ADB2BE51E6CDE292B82DE2A"},
    {"rabbit rfc4503 a.2 iv1", CipherId::Rabbit, "00000000000000000000000000000000", "597E26C175F573C3", 0,
     "6D7D012292CCDCE0E2120058B94ECD1F2E6F93EDFF99247B012521D1104E5FA7A79B0212D0BD56233938E793C312C1EB"},
    {"salsa20 estream set1 v0", CipherId::Salsa20, "80000000000000000000000000000000", "0000000000000000", 0,
     "4DFA5E481DA23EA09A31022050859936DA52FCEE218005164F267CB65F5CFD7F"
     "2B4F97E0FF16924A52DF269515110A07F9E460BC65EF95DA58F740B7D1DBB0AA"},
    {"salsa20 seq key", CipherId::Salsa20, "000102030405060708090a0b0c0d0e0f", "08090a0b0c0d0e0f", 0,
     "94bb0766a12b09e015ade61c6d612a59c515b1cb1c5f30abb7406576ea44cd9f"
     "1872fff73d58da704c5bf76b26a90fce14d0aba6972c74869673e44520ecc134"},
    {"salsa20 set6 key @65472", CipherId::Salsa20, "0F62B5085BAE0154A7FA4DA0F34699EC", "288FF65DC42B92F9", 65472,
     "906258725ddd0323d8e3098cbdad6b7f941682a4745e4a42b3dc6edee565e6d9"
     "c65630610cdb14b5f110425f5a6dbf1870856183fa5b91fc177dfa721c5d6bf0"},
};

VectorResult compare(std::string name, std::span<const std::uint8_t> expected, std::span<const std::uint8_t> actual,
                     std::size_t base) {
  VectorResult r{std::move(name), true, std::nullopt, {}};
  if (auto off = first_mismatch(expected, actual)) {
    r.passed = false;
    r.mismatch_offset = base + *off;
    r.detail = "first mismatch at byte " + std::to_string(base + *off);
  }
  return r;
}

VectorResult run_kat(const Kat& kat) {
  const auto key = parse_hex_bytes(kat.key);
  const auto expected = parse_hex_bytes(kat.expected);
  const auto variant = standard_variant(kat.cipher);
  std::vector<std::uint8_t> out(kat.offset + expected.size());
  if (kat.iv == nullptr) {
    Rabbit gen(variant, key, {});
    gen.generate(out);
  } else {
    make_generator(variant, KeyIv{key, parse_hex_bytes(kat.iv)})->generate(out);
  }
  return compare(kat.name, expected, std::span(out).subspan(kat.offset), kat.offset);
}

}  // namespace

GoldenFile parse_golden(const std::string& text) {
  GoldenFile g;
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> length;
  bool have_cipher = false, have_key = false, have_iv = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string value;
    if (head == "cipher") {
      ls >> value;
      g.cipher = parse_cipher(value);
      have_cipher = true;
    } else if (head == "variant") {
      ls >> g.variant;
    } else if (head == "key") {
      ls >> value;
      g.kiv.key = parse_hex_bytes(value);
      have_key = true;
    } else if (head == "iv") {
      ls >> value;
      g.kiv.iv = parse_hex_bytes(value);
      have_iv = true;
    } else if (head == "length") {
      std::size_t n = 0;
      if (!(ls >> n)) throw ConfigError("golden file: bad length line");
      length = n;
    } else {
      const auto bytes = parse_hex_bytes(head);
      g.bytes.insert(g.bytes.end(), bytes.begin(), bytes.end());
    }
  }
  if (!have_cipher || !have_key || !have_iv || !length) throw ConfigError("golden file: missing header field");
  if (g.variant != "rot" && g.variant != "drt") throw ConfigError("golden file: variant must be rot or drt");
  if (g.bytes.size() != *length) {
    throw ConfigError("golden file: declared length " + std::to_string(*length) + " but found " +
                      std::to_string(g.bytes.size()) + " bytes");
  }
  return g;
}

GoldenFile load_golden(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read golden file " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  try {
    return parse_golden(ss.str());
  } catch (const ParameterError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::optional<std::size_t> first_mismatch(std::span<const std::uint8_t> expected,
                                          std::span<const std::uint8_t> actual) noexcept {
  const std::size_t n = std::min(expected.size(), actual.size());
  const auto [e, a] = std::mismatch(expected.begin(), expected.begin() + n, actual.begin());
  if (e != expected.begin() + n) return static_cast<std::size_t>(e - expected.begin());
  if (expected.size() != actual.size()) return n;
  return std::nullopt;
}

bool SelfTestReport::passed() const noexcept {
  return !vectors.empty() && std::all_of(vectors.begin(), vectors.end(), [](const auto& v) { return v.passed; });
}

VectorResult check_golden(const GoldenFile& golden, const std::string& name) {
  const auto variant = golden.variant == "drt" ? drt_variant(golden.cipher) : standard_variant(golden.cipher);
  const auto actual = keystream(variant, golden.kiv, golden.bytes.size());
  return compare(name, golden.bytes, actual, 0);
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("DRT_GOLDEN_DIR"); env != nullptr && *env != '\0') return env;
  return DRT_GOLDEN_DIR;
}

SelfTestReport self_test(CipherId id, const std::filesystem::path& golden_dir) {
  SelfTestReport report{id, {}};
  for (const auto& kat : kKats) {
    if (kat.cipher == id) report.vectors.push_back(run_kat(kat));
  }

  std::vector<std::filesystem::path> files;
  std::error_code ec;
  const std::string prefix = std::string(cipher_name(id)) + "_";
  for (const auto& entry : std::filesystem::directory_iterator(golden_dir, ec)) {
    const auto fname = entry.path().filename().string();
    if (entry.path().extension() == ".txt" && fname.rfind(prefix, 0) == 0) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (ec || files.empty()) {
    report.vectors.push_back({"golden files", false, std::nullopt, "no golden files found in " + golden_dir.string()});
    return report;
  }
  for (const auto& path : files) {
    const auto name = "golden " + path.filename().string();
    try {
      report.vectors.push_back(check_golden(load_golden(path), name));
    } catch (const std::exception& e) {
      report.vectors.push_back({name, false, std::nullopt, e.what()});
    }
  }
  return report;
}

}  // namespace drt::ciphers
