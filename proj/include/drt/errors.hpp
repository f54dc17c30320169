#pragma once

#include <stdexcept>
#include <string>

namespace drt {

/// Operator parameters outside their documented domain (shift ranges, a + b constraint).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear map that was asked to invert but has a nontrivial kernel.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration requested for a word width that is too large.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed configuration, fixture or golden-file content.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure (missing file, short read, write failure).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drt
