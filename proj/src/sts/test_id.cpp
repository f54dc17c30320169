#include "drt/sts/test_id.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "drt/errors.hpp"

namespace drt::sts {

namespace {

struct Names {
  std::string_view abbr;
  std::string_view full;
};

constexpr Names kNames[kTestCount] = {
    {"Freq", "The Frequency (Monobit) Test"},
    {"BF", "Frequency Test within a Block"},
    {"Run", "The Runs Test"},
    {"LR", "Tests for the Longest-Run-of-Ones in a Block"},
    {"Rank", "The Binary Matrix Rank Test"},
    {"FFT", "The Discrete Fourier Transform (Spectral) Test"},
    {"NOT", "The Non-overlapping Template Matching Test"},
    {"OT", "The Overlapping Template Matching Test"},
    {"Uni", "Maurer's \"Universal Statistical\" Test"},
    {"LC", "The Linear Complexity Test"},
    {"Seri", "The Serial Test"},
    {"AE", "The Approximate Entropy Test"},
    {"CS", "The Cumulative Sums Test"},
    {"RE", "The Random Excursions Test"},
    {"REV", "The Random Excursions Variant Test"},
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view abbreviation(TestId id) noexcept { return kNames[index_of(id)].abbr; }

std::string_view full_name(TestId id) noexcept { return kNames[index_of(id)].full; }

TestId parse_test_id(std::string_view text) {
  for (auto id : kAllTests) {
    if (iequals(text, abbreviation(id))) return id;
  }
  throw ParameterError("unknown test '" + std::string(text) + "'");
}

}  // namespace drt::sts
