#include "drt/core/analysis.hpp"

#include <bit>

#include "drt/errors.hpp"

namespace drt {

namespace {

void require_enumerable(WordSpec spec) {
  if (spec.n() > kExhaustiveWidthLimit) {
    throw SizeLimitError("exhaustive enumeration supports n <= 16, got n = " +
                         std::to_string(spec.n()));
  }
}

Word low_mask(unsigned width) { return width >= 64 ? ~Word{0} : (Word{1} << width) - 1; }

}  // namespace

bool exhaustive_injective(const MapDescriptor& op) {
  require_enumerable(op.spec());
  const Word count = Word{1} << op.spec().n();
  std::vector<bool> seen(count, false);
  for (Word x = 0; x < count; ++x) {
    const Word y = op.apply(x);
    if (seen[y]) {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

BijectivityReport is_bijective(const MapDescriptor& op) {
  BijectivityReport report;
  const unsigned n = op.spec().n();
  report.rank = build_gf2_matrix(op).rank();
  report.kernel_dimension = n - report.rank;
  report.bijective = report.rank == n;
  if (n <= kExhaustiveWidthLimit) {
    report.exhaustive = exhaustive_injective(op);
  }
  return report;
}

std::vector<Word> kernel_basis(const MapDescriptor& op) { return build_gf2_matrix(op).kernel_basis(); }

LinearInverse::LinearInverse(const MapDescriptor& op) : op_(op) {
  const auto inv = build_gf2_matrix(op).inverse();
  if (!inv) {
    throw NotInvertibleError(op.name() + " is not invertible at n = " + std::to_string(op.spec().n()));
  }
  columns_.resize(op.spec().n());
  for (unsigned j = 0; j < op.spec().n(); ++j) {
    columns_[j] = inv->column(j);
  }
}

Word drt_inverse(Word y, const ShiftPair& p, WordSpec spec) {
  spec.check(y);
  return LinearInverse(MapDescriptor::drt(p, spec))(y);
}

BlockDecomposition block_decompose(const ShiftPair& p, WordSpec spec) {
  const unsigned a = p.a();
  const unsigned b = p.b();
  const unsigned n = spec.n();
  const unsigned period = a + b;
  if (a < 1 || b < 1 || !std::has_single_bit(period) || period >= n) {
    throw ParameterError("block decomposition needs a, b >= 1 and a + b = 2^k < n");
  }
  const unsigned count = 2 * n / period;

  BlockDecomposition d{p, spec, {}, {}};
  d.left.reserve(count);
  d.right.reserve(count);
  for (unsigned t = 0; t < count; ++t) {
    const bool even = t % 2 == 0;
    const unsigned width = even ? a : b;
    const unsigned offset = even ? (t / 2) * period : ((t - 1) / 2) * period + a;

    Block lhs{width, offset, std::nullopt};
    if (offset >= a) {
      lhs.source_low = offset - a;
    }
    Block rhs{width, offset, std::nullopt};
    if (offset + b + width <= n) {
      rhs.source_low = offset + b;
    }
    d.left.push_back(lhs);
    d.right.push_back(rhs);
  }
  return d;
}

Word reconstruct(const BlockDecomposition& d, Word x) {
  auto bits = [x](const Block& blk) -> Word {
    return blk.is_zero() ? 0 : (x >> *blk.source_low) & low_mask(blk.width);
  };
  Word y = 0;
  for (std::size_t t = 0; t < d.left.size(); ++t) {
    y |= (bits(d.left[t]) ^ bits(d.right[t])) << d.left[t].output_offset;
  }
  return y;
}

DispersionProfile dispersion_profile(const MapDescriptor& op) {
  const auto m = build_gf2_matrix(op);
  const unsigned n = op.spec().n();
  DispersionProfile profile;
  profile.dependency_count = m.ones();
  profile.avalanche.resize(n);

  std::vector<Word> columns(n);
  for (unsigned j = 0; j < n; ++j) {
    columns[j] = m.column(j);
    profile.avalanche[j] = static_cast<unsigned>(std::popcount(columns[j]));
    if (profile.avalanche[j] == 1) {
      ++profile.single_dependency_inputs;
    }
  }
  for (unsigned j = 0; j + 1 < n; ++j) {
    if (profile.avalanche[j] == 1 && profile.avalanche[j + 1] == 1 &&
        std::countr_zero(columns[j + 1]) == std::countr_zero(columns[j]) + 1) {
      ++profile.preserved_pair_count;
    }
  }
  return profile;
}

std::vector<std::pair<Word, Word>> graph_points(const MapDescriptor& op) {
  require_enumerable(op.spec());
  const Word count = Word{1} << op.spec().n();
  std::vector<std::pair<Word, Word>> points;
  points.reserve(count);
  for (Word x = 0; x < count; ++x) {
    points.emplace_back(x, op.apply(x));
  }
  return points;
}

}  // namespace drt
