#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <vector>

#include "drt/sts/config.hpp"

namespace drt::sts {

/// One bit per byte, values 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// Pull-based byte source for streaming input.
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  /// Fills up to out.size() bytes; returns the count, 0 at end of input.
  virtual std::size_t read(std::span<std::uint8_t> out) = 0;
};

class MemorySource final : public ByteSource {
 public:
  explicit MemorySource(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
  std::size_t read(std::span<std::uint8_t> out) override;

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

class FileSource final : public ByteSource {
 public:
  /// Throws IoError when the file cannot be opened.
  explicit FileSource(const std::filesystem::path& path);
  std::size_t read(std::span<std::uint8_t> out) override;

 private:
  std::ifstream in_;
  std::filesystem::path path_;
};

/// Keystream bytes addressed as bits, most significant bit of each byte first.
class BitStream {
 public:
  /// total_bits defaults to 8 * bytes.size(); must not exceed it.
  explicit BitStream(std::vector<std::uint8_t> bytes);
  BitStream(std::vector<std::uint8_t> bytes, std::size_t total_bits);
  static BitStream from_bits(std::span<const std::uint8_t> bits);

  [[nodiscard]] std::size_t total_bits() const noexcept { return total_bits_; }
  [[nodiscard]] bool bit(std::size_t i) const noexcept { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u; }
  [[nodiscard]] Bits bits(std::size_t offset, std::size_t count) const;
  /// Packs the addressed bits back to bytes; trailing pad bits are zero.
  [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t total_bits_;
};

/// Appends bytes unpacked MSB-first to out.
void unpack_bits(std::span<const std::uint8_t> bytes, Bits& out);

/// Reads consecutive sequence_bits-long sequences from a byte source, holding
/// only one sequence (plus one partial byte) in memory.
class SequenceReader {
 public:
  SequenceReader(ByteSource& source, std::size_t sequence_bits);
  /// Fills out with the next sequence; false when fewer bits remain.
  bool next(Bits& out);

 private:
  ByteSource& source_;
  std::size_t sequence_bits_;
  Bits carry_;
  std::vector<std::uint8_t> buffer_;
};

/// floor(total / L), capped by config.max_sequences when set.
std::size_t sequence_count(std::size_t total_bits, const SuiteConfig& config) noexcept;

/// Splits the stream into S sequences of L bits, discarding leftovers.
/// Throws ParameterError when the stream is shorter than one sequence.
std::vector<Bits> partition(const BitStream& stream, const SuiteConfig& config);

}  // namespace drt::sts
