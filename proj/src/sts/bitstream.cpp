#include "drt/sts/bitstream.hpp"

#include <algorithm>
#include <cstring>

#include "drt/errors.hpp"

namespace drt::sts {

std::size_t MemorySource::read(std::span<std::uint8_t> out) {
  const std::size_t n = std::min(out.size(), bytes_.size() - pos_);
  std::memcpy(out.data(), bytes_.data() + pos_, n);
  pos_ += n;
  return n;
}

FileSource::FileSource(const std::filesystem::path& path) : in_(path, std::ios::binary), path_(path) {
  if (!in_) throw IoError("cannot open " + path.string());
}

std::size_t FileSource::read(std::span<std::uint8_t> out) {
  in_.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (in_.bad()) throw IoError("read error on " + path_.string());
  return static_cast<std::size_t>(in_.gcount());
}

BitStream::BitStream(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)), total_bits_(bytes_.size() * 8) {}

BitStream::BitStream(std::vector<std::uint8_t> bytes, std::size_t total_bits)
    : bytes_(std::move(bytes)), total_bits_(total_bits) {
  if (total_bits_ > bytes_.size() * 8) throw ParameterError("total_bits exceeds the byte length");
}

BitStream BitStream::from_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
  }
  return BitStream(std::move(bytes), bits.size());
}

Bits BitStream::bits(std::size_t offset, std::size_t count) const {
  if (offset > total_bits_ || count > total_bits_ - offset) throw ParameterError("bit range out of bounds");
  Bits out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = bit(offset + i);
  return out;
}

std::vector<std::uint8_t> BitStream::to_bytes() const {
  std::vector<std::uint8_t> out(bytes_.begin(), bytes_.begin() + static_cast<std::ptrdiff_t>((total_bits_ + 7) / 8));
  if (total_bits_ % 8 != 0) out.back() &= static_cast<std::uint8_t>(0xFF00u >> (total_bits_ % 8));
  return out;
}

void unpack_bits(std::span<const std::uint8_t> bytes, Bits& out) {
  const std::size_t base = out.size();
  out.resize(base + bytes.size() * 8);
  std::uint8_t* p = out.data() + base;
  for (std::uint8_t b : bytes) {
    for (int k = 7; k >= 0; --k) *p++ = (b >> k) & 1u;
  }
}

SequenceReader::SequenceReader(ByteSource& source, std::size_t sequence_bits)
    : source_(source), sequence_bits_(sequence_bits), buffer_(1 << 16) {
  if (sequence_bits == 0) throw ParameterError("sequence length must be positive");
}

bool SequenceReader::next(Bits& out) {
  out.clear();
  out.reserve(sequence_bits_ + 8);
  out.insert(out.end(), carry_.begin(), carry_.end());
  carry_.clear();
  while (out.size() < sequence_bits_) {
    const std::size_t need_bytes = (sequence_bits_ - out.size() + 7) / 8;
    const std::size_t got = source_.read(std::span(buffer_).first(std::min(need_bytes, buffer_.size())));
    if (got == 0) {
      out.clear();
      return false;
    }
    unpack_bits(std::span(buffer_).first(got), out);
  }
  if (out.size() > sequence_bits_) {
    carry_.assign(out.begin() + static_cast<std::ptrdiff_t>(sequence_bits_), out.end());
    out.resize(sequence_bits_);
  }
  return true;
}

std::size_t sequence_count(std::size_t total_bits, const SuiteConfig& config) noexcept {
  if (config.sequence_length == 0) return 0;
  std::size_t s = total_bits / config.sequence_length;
  if (config.max_sequences != 0) s = std::min(s, config.max_sequences);
  return s;
}

std::vector<Bits> partition(const BitStream& stream, const SuiteConfig& config) {
  const std::size_t s = sequence_count(stream.total_bits(), config);
  if (s == 0) {
    throw ParameterError("stream of " + std::to_string(stream.total_bits()) + " bits is shorter than one " +
                         std::to_string(config.sequence_length) + "-bit sequence");
  }
  std::vector<Bits> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) out.push_back(stream.bits(i * config.sequence_length, config.sequence_length));
  return out;
}

}  // namespace drt::sts
