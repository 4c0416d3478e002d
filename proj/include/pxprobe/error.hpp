#pragma once

#include <stdexcept>
#include <string>

namespace pxprobe {

/// Caller violated a documented precondition (dimension mismatch, empty set,
/// parameter out of range).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input data: unparsable numbers, bad CSV rows, bad oracle configs.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pxprobe
