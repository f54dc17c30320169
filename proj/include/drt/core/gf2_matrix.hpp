#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "drt/core/operators.hpp"
#include "drt/core/word.hpp"

namespace drt {

/// Square n x n matrix over GF(2), n <= 64. Row i is a bit mask of the input
/// bits that output bit i depends on, so M * x is row-wise parity of (row & x).
class Gf2Matrix {
 public:
  explicit Gf2Matrix(WordSpec spec);

  [[nodiscard]] WordSpec spec() const noexcept { return spec_; }
  [[nodiscard]] unsigned size() const noexcept { return spec_.n(); }

  [[nodiscard]] bool get(unsigned row, unsigned col) const noexcept { return (rows_[row] >> col) & 1u; }
  void set(unsigned row, unsigned col, bool value) noexcept;
  [[nodiscard]] Word row(unsigned i) const noexcept { return rows_[i]; }
  [[nodiscard]] Word column(unsigned j) const noexcept;

  [[nodiscard]] Word apply(Word x) const noexcept;
  [[nodiscard]] unsigned ones() const noexcept;
  [[nodiscard]] unsigned rank() const;

  /// Basis of {x : M x = 0}, reduced so each vector has a distinct leading free bit.
  [[nodiscard]] std::vector<Word> kernel_basis() const;

  /// Gauss-Jordan inverse; empty when singular.
  [[nodiscard]] std::optional<Gf2Matrix> inverse() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  WordSpec spec_;
  std::vector<Word> rows_;
};

/// Matrix with M[i][j] = 1 iff output bit i of the map depends on input bit j.
Gf2Matrix build_gf2_matrix(const MapDescriptor& op);

}  // namespace drt
