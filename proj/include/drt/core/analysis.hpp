#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "drt/core/gf2_matrix.hpp"
#include "drt/core/operators.hpp"
#include "drt/core/word.hpp"

namespace drt {

/// Largest width for which every input is enumerated.
inline constexpr unsigned kExhaustiveWidthLimit = 16;

struct BijectivityReport {
  bool bijective = false;
  unsigned rank = 0;
  unsigned kernel_dimension = 0;
  /// Present for n <= 16: injectivity established by enumerating all 2^n inputs.
  std::optional<bool> exhaustive;
};

/// Rank verdict plus, for small widths, the enumeration verdict. The two
/// always agree for a linear map; callers may assert that.
BijectivityReport is_bijective(const MapDescriptor& op);

/// Enumerates all 2^n inputs and reports whether the images are distinct.
/// Throws SizeLimitError when n > 16.
bool exhaustive_injective(const MapDescriptor& op);

std::vector<Word> kernel_basis(const MapDescriptor& op);

/// Precomputed GF(2) inverse of a bijective map. Applying it costs one XOR
/// per set bit of the input, using the inverse's column masks.
class LinearInverse {
 public:
  /// Throws NotInvertibleError when the map is singular.
  explicit LinearInverse(const MapDescriptor& op);

  [[nodiscard]] Word operator()(Word y) const noexcept {
    Word x = 0;
    while (y != 0) {
      x ^= columns_[static_cast<unsigned>(std::countr_zero(y))];
      y &= y - 1;
    }
    return x;
  }

  [[nodiscard]] const MapDescriptor& map() const noexcept { return op_; }

 private:
  MapDescriptor op_;
  std::vector<Word> columns_;
};

/// Inverse of drt(., p) at y. Builds the inverse table per call; hold a
/// LinearInverse when inverting many words.
Word drt_inverse(Word y, const ShiftPair& p, WordSpec spec);

/// One block of the left (x << a) or right (x >> b) operand. Blocks are listed
/// from the least significant end; `source_low` is the input index feeding the
/// block's lowest bit, absent for all-zero blocks.
struct Block {
  unsigned width = 0;
  unsigned output_offset = 0;
  std::optional<unsigned> source_low;

  [[nodiscard]] bool is_zero() const noexcept { return !source_low.has_value(); }
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  ShiftPair pair;
  WordSpec spec;
  std::vector<Block> left;   // A_0 ... A_{2^{m-k+1}-1}
  std::vector<Block> right;  // B_0 ... B_{2^{m-k+1}-1}
};

/// Splits x << a and x >> b into alternating a-bit / b-bit blocks on the grid
/// of period a + b. Requires a + b to be a power of two below n.
BlockDecomposition block_decompose(const ShiftPair& p, WordSpec spec);

/// Rebuilds the DRT output from the decomposition by copying block source bits
/// and XORing A_i with B_i.
Word reconstruct(const BlockDecomposition& d, Word x);

struct DispersionProfile {
  unsigned dependency_count = 0;
  /// Input bits j whose column has exactly one 1.
  unsigned single_dependency_inputs = 0;
  /// Input bits j such that j and j + 1 both have single images p and p + 1.
  unsigned preserved_pair_count = 0;
  /// avalanche[j] = number of output bits flipped by flipping input bit j.
  std::vector<unsigned> avalanche;
};

DispersionProfile dispersion_profile(const MapDescriptor& op);

/// All (x, map(x)) pairs in ascending x. Throws SizeLimitError when n > 16.
std::vector<std::pair<Word, Word>> graph_points(const MapDescriptor& op);

}  // namespace drt
