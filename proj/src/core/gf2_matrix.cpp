#include "drt/core/gf2_matrix.hpp"

#include <utility>

namespace drt {

namespace {

// Row-reduces in place to reduced row echelon form; returns pivot columns by row.
std::vector<unsigned> reduce(std::vector<Word>& rows, unsigned n) {
  std::vector<unsigned> pivots;
  unsigned r = 0;
  for (unsigned col = 0; col < n && r < rows.size(); ++col) {
    const Word bit = Word{1} << col;
    unsigned pick = r;
    while (pick < rows.size() && (rows[pick] & bit) == 0) {
      ++pick;
    }
    if (pick == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[pick]);
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] & bit) != 0) {
        rows[i] ^= rows[r];
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

Gf2Matrix::Gf2Matrix(WordSpec spec) : spec_(spec), rows_(spec.n(), 0) {}

void Gf2Matrix::set(unsigned row, unsigned col, bool value) noexcept {
  const Word bit = Word{1} << col;
  rows_[row] = value ? (rows_[row] | bit) : (rows_[row] & ~bit);
}

Word Gf2Matrix::column(unsigned j) const noexcept {
  Word c = 0;
  for (unsigned i = 0; i < size(); ++i) {
    c |= ((rows_[i] >> j) & 1u) << i;
  }
  return c;
}

Word Gf2Matrix::apply(Word x) const noexcept {
  Word y = 0;
  for (unsigned i = 0; i < size(); ++i) {
    y |= static_cast<Word>(std::popcount(rows_[i] & x) & 1) << i;
  }
  return y;
}

unsigned Gf2Matrix::ones() const noexcept {
  unsigned total = 0;
  for (Word r : rows_) {
    total += static_cast<unsigned>(std::popcount(r));
  }
  return total;
}

unsigned Gf2Matrix::rank() const {
  auto rows = rows_;
  return static_cast<unsigned>(reduce(rows, size()).size());
}

std::vector<Word> Gf2Matrix::kernel_basis() const {
  auto rows = rows_;
  const auto pivots = reduce(rows, size());
  Word pivot_mask = 0;
  for (unsigned p : pivots) {
    pivot_mask |= Word{1} << p;
  }
  std::vector<Word> basis;
  for (unsigned f = 0; f < size(); ++f) {
    if ((pivot_mask >> f) & 1u) {
      continue;
    }
    Word v = Word{1} << f;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if ((rows[r] >> f) & 1u) {
        v |= Word{1} << pivots[r];
      }
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
  const unsigned n = size();
  auto left = rows_;
  std::vector<Word> right(n);
  for (unsigned i = 0; i < n; ++i) {
    right[i] = Word{1} << i;
  }
  for (unsigned col = 0; col < n; ++col) {
    const Word bit = Word{1} << col;
    unsigned pick = col;
    while (pick < n && (left[pick] & bit) == 0) {
      ++pick;
    }
    if (pick == n) {
      return std::nullopt;
    }
    std::swap(left[col], left[pick]);
    std::swap(right[col], right[pick]);
    for (unsigned i = 0; i < n; ++i) {
      if (i != col && (left[i] & bit) != 0) {
        left[i] ^= left[col];
        right[i] ^= right[col];
      }
    }
  }
  Gf2Matrix inv(spec_);
  inv.rows_ = std::move(right);
  return inv;
}

Gf2Matrix build_gf2_matrix(const MapDescriptor& op) {
  Gf2Matrix m(op.spec());
  const unsigned n = op.spec().n();
  auto toggle = [&m](unsigned i, unsigned j) { m.set(i, j, !m.get(i, j)); };
  if (const auto* r = std::get_if<RotMap>(&op.map())) {
    for (unsigned i = 0; i < n; ++i) {
      toggle(i, (i + n - r->c) % n);
    }
    return m;
  }
  // y_i = x_{i-a} ^ x_{i+b}, terms outside [0, n) dropped.
  const auto& pair = std::get<DrtMap>(op.map()).pair;
  for (unsigned i = 0; i < n; ++i) {
    if (i >= pair.a()) {
      toggle(i, i - pair.a());
    }
    if (i + pair.b() < n) {
      toggle(i, i + pair.b());
    }
  }
  return m;
}

}  // namespace drt
