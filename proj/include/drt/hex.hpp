#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drt {

/// Lowercase hex, no separators.
std::string to_hex_bytes(std::span<const std::uint8_t> bytes, std::string_view sep = "");

/// Accepts upper/lower case; whitespace between byte pairs is ignored.
/// Throws ParameterError on odd digit counts or non-hex characters.
std::vector<std::uint8_t> parse_hex_bytes(std::string_view text);

}  // namespace drt
