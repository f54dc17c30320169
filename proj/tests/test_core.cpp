#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "drt/core/analysis.hpp"
#include "drt/core/gf2_matrix.hpp"
#include "drt/core/operators.hpp"
#include "drt/errors.hpp"
#include "drt/hex.hpp"

using namespace drt;

namespace {

const WordSpec W8 = WordSpec::from_width(8);
const WordSpec W16 = WordSpec::from_width(16);
const WordSpec W32 = WordSpec::from_width(32);
const WordSpec W64 = WordSpec::from_width(64);

std::vector<ShiftPair> valid_pairs(WordSpec spec) {
  std::vector<ShiftPair> out;
  for (unsigned s = 4; s < spec.n(); s *= 2) {
    for (unsigned a = 1; a < s; ++a) out.push_back(ShiftPair::make(a, s - a, spec));
  }
  return out;
}

Word random_word(std::mt19937_64& rng, WordSpec spec) { return rng() & spec.mask(); }

}  // namespace

TEST_CASE("word spec accepts only supported widths") {
  CHECK(WordSpec::from_exponent(5).n() == 32);
  CHECK(WordSpec::from_width(64).m() == 6);
  CHECK_THROWS_AS(WordSpec::from_width(12), ParameterError);
  CHECK_THROWS_AS(WordSpec::from_exponent(2), ParameterError);
  CHECK_THROWS_AS(WordSpec::from_exponent(7), ParameterError);
}

TEST_CASE("shift pair constraints") {
  CHECK_NOTHROW(ShiftPair::make(7, 9, W32));
  CHECK_NOTHROW(ShiftPair::make(3, 1, W8));
  CHECK_THROWS_AS(ShiftPair::make(5, 6, W32), ParameterError);
  CHECK_THROWS_AS(ShiftPair::make(0, 4, W32), ParameterError);
  CHECK_THROWS_AS(ShiftPair::make(16, 16, W32), ParameterError);  // a + b = n
  CHECK_THROWS_AS(ShiftPair::make(1, 1, W32), ParameterError);    // k = 1
  const auto why = ShiftPair::violation(5, 6, W32);
  REQUIRE(why);
  CHECK(why->find("a + b must equal 2^k < n") != std::string::npos);
  CHECK(ShiftPair::make(7, 9, W32).k() == 4u);
}

TEST_CASE("rotation examples") {
  CHECK(rot_left(0x01, 1, W8) == 0x02);
  CHECK(rot_left(0x80, 1, W8) == 0x01);
  CHECK(rot_left(0x5A, 0, W8) == 0x5A);
  CHECK(rot_right(0x01, 1, W8) == 0x80);
  CHECK(rot_right(0x02, 1, W8) == 0x01);
  CHECK_THROWS_AS(rot_left(1, 8, W8), ParameterError);
  std::mt19937_64 rng(1);
  for (auto spec : {W8, W16, W32, W64}) {
    for (int i = 0; i < 200; ++i) {
      const Word x = random_word(rng, spec);
      const unsigned c = static_cast<unsigned>(rng() % spec.n());
      CHECK(rot_right(rot_left(x, c, spec), c, spec) == x);
      if (c != 0) CHECK(rot_right(x, c, spec) == rot_left(x, spec.n() - c, spec));
    }
  }
}

TEST_CASE("drt examples") {
  const auto p = ShiftPair::make(7, 9, W32);
  CHECK(drt::drt(0x00000000, p, W32) == 0x00000000);
  CHECK(drt::drt(0x00000001, p, W32) == 0x00000080);
  CHECK(drt::drt(0xFFFFFFFF, p, W32) == 0xFF80007F);
  CHECK_THROWS_AS(drt::drt(Word{1} << 32, p, W32), ParameterError);
}

TEST_CASE("drt output bit formula") {
  std::mt19937_64 rng(2);
  for (auto spec : {W8, W16, W32, W64}) {
    for (const auto& p : valid_pairs(spec)) {
      const Word x = random_word(rng, spec);
      const Word y = drt::drt(x, p, spec);
      for (unsigned i = 0; i < spec.n(); ++i) {
        unsigned bit = 0;
        if (i >= p.a()) bit ^= (x >> (i - p.a())) & 1u;
        if (i + p.b() < spec.n()) bit ^= (x >> (i + p.b())) & 1u;
        REQUIRE(((y >> i) & 1u) == bit);
      }
    }
  }
}

TEST_CASE("gf2 matrix shape and matrix/direct agreement") {
  const auto rot = build_gf2_matrix(MapDescriptor::rot(5, W32));
  CHECK(rot.ones() == 32);
  for (unsigned i = 0; i < 32; ++i) CHECK(std::popcount(rot.row(i)) == 1);

  const auto m = build_gf2_matrix(MapDescriptor::drt(ShiftPair::make(7, 9, W32), W32));
  CHECK(m.ones() == 48);

  std::mt19937_64 rng(3);
  for (auto spec : {W8, W16, W32, W64}) {
    std::vector<MapDescriptor> ops;
    for (const auto& p : valid_pairs(spec)) ops.push_back(MapDescriptor::drt(p, spec));
    for (unsigned c = 0; c < spec.n(); c += 3) ops.push_back(MapDescriptor::rot(c, spec));
    for (const auto& op : ops) {
      const auto mat = build_gf2_matrix(op);
      const int samples = spec.n() == 32 ? 10000 : 500;
      for (int i = 0; i < samples; ++i) {
        const Word x = random_word(rng, spec);
        REQUIRE(mat.apply(x) == op.apply(x));
      }
    }
  }
}

TEST_CASE("bijectivity: exhaustive and rank agree") {
  for (auto spec : {W8, W16}) {
    for (const auto& p : valid_pairs(spec)) {
      const auto r = is_bijective(MapDescriptor::drt(p, spec));
      CHECK(r.bijective);
      REQUIRE(r.exhaustive);
      CHECK(*r.exhaustive);
      CHECK(r.rank == spec.n());
    }
  }
  for (unsigned c = 0; c < 8; ++c) CHECK(is_bijective(MapDescriptor::rot(c, W8)).bijective);

  const auto bad = is_bijective(MapDescriptor::drt(ShiftPair::unchecked(2, 1), W8));
  CHECK_FALSE(bad.bijective);
  CHECK(bad.exhaustive == false);
  CHECK(bad.kernel_dimension == 1);
  CHECK(kernel_basis(MapDescriptor::drt(ShiftPair::unchecked(2, 1), W8)).size() == 1);
}

TEST_CASE("necessity probe at n = 8: rank verdict equals brute force for every a, b") {
  for (unsigned a = 1; a <= 8; ++a) {
    for (unsigned b = 1; b <= 8; ++b) {
      const auto op = MapDescriptor::drt(ShiftPair::unchecked(a, b), W8);
      const auto r = is_bijective(op);
      REQUIRE(r.exhaustive);
      CHECK(r.bijective == *r.exhaustive);
      if (a + b != 4) {
        INFO("a=" << a << " b=" << b);
        // only a+b = 4 is in the family; others may still be bijective (e.g. a + b >= n)
        CHECK((r.bijective ? kernel_basis(op).empty() : !kernel_basis(op).empty()));
      }
    }
  }
}

TEST_CASE("kernel vectors map to zero") {
  for (unsigned a = 1; a < 8; ++a) {
    for (unsigned b = 1; b < 8; ++b) {
      const auto op = MapDescriptor::drt(ShiftPair::unchecked(a, b), W8);
      for (Word v : kernel_basis(op)) {
        CHECK(v != 0);
        CHECK(op.apply(v) == 0);
      }
    }
  }
  CHECK(kernel_basis(MapDescriptor::drt(ShiftPair::make(7, 9, W32), W32)).empty());
  CHECK(kernel_basis(MapDescriptor::rot(5, W32)).empty());
}

TEST_CASE("bijectivity by rank at n = 32 and 64") {
  for (auto spec : {W32, W64}) {
    for (const auto& p : valid_pairs(spec)) {
      const auto r = is_bijective(MapDescriptor::drt(p, spec));
      CHECK(r.bijective);
      CHECK_FALSE(r.exhaustive);
    }
  }
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(4);
  const auto p = ShiftPair::make(7, 9, W32);
  for (int i = 0; i < 10000; ++i) {
    const Word x = random_word(rng, W32), y = random_word(rng, W32);
    REQUIRE(drt::drt(x ^ y, p, W32) == (drt::drt(x, p, W32) ^ drt::drt(y, p, W32)));
  }
}

TEST_CASE("inverse round trip") {
  const auto p = ShiftPair::make(7, 9, W32);
  CHECK(drt_inverse(0, p, W32) == 0);
  CHECK(drt_inverse(0x80, p, W32) == 1);

  std::mt19937_64 rng(5);
  for (auto spec : {W8, W16, W32, W64}) {
    for (const auto& pair : valid_pairs(spec)) {
      const LinearInverse inv(MapDescriptor::drt(pair, spec));
      for (int i = 0; i < 200; ++i) {
        const Word x = random_word(rng, spec);
        REQUIRE(inv(drt::drt(x, pair, spec)) == x);
        REQUIRE(drt::drt(inv(x), pair, spec) == x);
      }
    }
  }
  CHECK_THROWS_AS(LinearInverse(MapDescriptor::drt(ShiftPair::unchecked(2, 1), W8)), NotInvertibleError);
}

TEST_CASE("block decomposition worked example (m=5, a=7, b=9)") {
  const auto d = block_decompose(ShiftPair::make(7, 9, W32), W32);
  REQUIRE(d.left.size() == 4);
  REQUIRE(d.right.size() == 4);
  CHECK(d.left[0] == Block{7, 0, std::nullopt});
  CHECK(d.left[1] == Block{9, 7, 0u});
  CHECK(d.left[2] == Block{7, 16, 9u});
  CHECK(d.left[3] == Block{9, 23, 16u});
  CHECK(d.right[0] == Block{7, 0, 9u});
  CHECK(d.right[1] == Block{9, 7, 16u});
  CHECK(d.right[2] == Block{7, 16, 25u});
  CHECK(d.right[3] == Block{9, 23, std::nullopt});
}

TEST_CASE("block decomposition invariants and reconstruction") {
  std::mt19937_64 rng(6);
  for (auto spec : {W8, W16, W32, W64}) {
    for (const auto& p : valid_pairs(spec)) {
      const auto d = block_decompose(p, spec);
      const std::size_t count = 2 * spec.n() / (p.a() + p.b());
      REQUIRE(d.left.size() == count);
      unsigned wl = 0, wr = 0;
      for (std::size_t i = 0; i < count; ++i) {
        CHECK(d.left[i].width == (i % 2 == 0 ? p.a() : p.b()));
        CHECK(d.right[i].width == d.left[i].width);
        wl += d.left[i].width;
        wr += d.right[i].width;
        if (i >= 2) {
          CHECK(d.left[i].source_low == d.right[i - 2].source_low);
          CHECK(d.left[i].width == d.right[i - 2].width);
        }
      }
      CHECK(wl == spec.n());
      CHECK(wr == spec.n());
      CHECK(d.left.front().is_zero());
      CHECK(d.right.back().is_zero());
      if (spec.n() == 8) {
        for (Word x = 0; x < 256; ++x) REQUIRE(reconstruct(d, x) == drt::drt(x, p, spec));
      } else {
        for (int i = 0; i < 1000; ++i) {
          const Word x = random_word(rng, spec);
          REQUIRE(reconstruct(d, x) == drt::drt(x, p, spec));
        }
      }
    }
  }
}

TEST_CASE("dispersion profile") {
  const auto rot = dispersion_profile(MapDescriptor::rot(10, W32));
  CHECK(rot.dependency_count == 32);
  CHECK(std::all_of(rot.avalanche.begin(), rot.avalanche.end(), [](unsigned v) { return v == 1; }));
  CHECK(rot.preserved_pair_count == 30);

  const auto d = dispersion_profile(MapDescriptor::drt(ShiftPair::make(7, 9, W32), W32));
  CHECK(d.dependency_count == 48);
  CHECK(d.single_dependency_inputs == 16);
  CHECK(std::count(d.avalanche.begin(), d.avalanche.end(), 1u) == 16);
  CHECK(std::count(d.avalanche.begin(), d.avalanche.end(), 2u) == 16);
  CHECK(d.preserved_pair_count == 14);

  for (auto spec : {W8, W16, W32, W64}) {
    for (const auto& p : valid_pairs(spec)) {
      const auto op = MapDescriptor::drt(p, spec);
      const auto prof = dispersion_profile(op);
      CHECK(prof.dependency_count == 2 * spec.n() - (p.a() + p.b()));
      CHECK(prof.single_dependency_inputs == p.a() + p.b());
      // brute force: flip each input bit and count changed outputs
      for (unsigned j = 0; j < spec.n(); ++j) {
        const Word y0 = op.apply(0x5a5a5a5a5a5a5a5aULL & spec.mask());
        const Word y1 = op.apply((0x5a5a5a5a5a5a5a5aULL ^ (Word{1} << j)) & spec.mask());
        CHECK(static_cast<unsigned>(std::popcount(y0 ^ y1)) == prof.avalanche[j]);
      }
    }
    for (unsigned c = 0; c < spec.n(); ++c) {
      CHECK(dispersion_profile(MapDescriptor::rot(c, spec)).dependency_count == spec.n());
    }
  }
}

TEST_CASE("graph points") {
  const auto pts = graph_points(MapDescriptor::drt(ShiftPair::make(1, 3, W8), W8));
  REQUIRE(pts.size() == 256);
  CHECK(pts.front() == std::pair<Word, Word>{0, 0});
  std::set<Word> ys;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].first == i);
    ys.insert(pts[i].second);
  }
  CHECK(ys.size() == 256);

  const auto rot = graph_points(MapDescriptor::rot(2, W8));
  std::size_t differ = 0;
  for (std::size_t i = 0; i < 256; ++i) differ += rot[i].second != pts[i].second;
  CHECK(differ >= 200);
  CHECK_THROWS_AS(graph_points(MapDescriptor::rot(1, W32)), SizeLimitError);
}

TEST_CASE("hex helpers") {
  CHECK(to_hex(0x80, W32) == "00000080");
  CHECK(parse_hex_word("0x00000080", W32) == 0x80);
  CHECK(parse_hex_word("FF80007f", W32) == 0xFF80007F);
  CHECK_THROWS_AS(parse_hex_word("123456789", W32), ParameterError);
  CHECK_THROWS_AS(parse_hex_word("zz", W32), ParameterError);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Word x = rng();
    CHECK(parse_hex_word(to_hex(x, W64), W64) == x);
  }
  const std::vector<std::uint8_t> bytes{0xF2, 0xA7, 0x00, 0x0b};
  CHECK(to_hex_bytes(bytes) == "f2a7000b");
  CHECK(to_hex_bytes(bytes, " ") == "f2 a7 00 0b");
  CHECK(parse_hex_bytes("F2 A7 00 0B") == bytes);
  CHECK_THROWS_AS(parse_hex_bytes("F"), ParameterError);
}
