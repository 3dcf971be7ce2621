#pragma once

#include <stdexcept>
#include <string>

namespace symchar {

/// Bad input: malformed partitions, mismatched sizes, invalid flags or files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed the configured enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold by construction failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symchar
