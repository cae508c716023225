#pragma once

#include <stdexcept>
#include <string>

namespace dhm {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a polarizing vector pairs to zero with some weight.
class NonGenericPolarization : public Error {
 public:
  NonGenericPolarization(std::string weight, const std::string& what)
      : Error(what), weight_(std::move(weight)) {}

  /// Textual form of the offending weight, e.g. "(-1,1)".
  const std::string& weight() const noexcept { return weight_; }

 private:
  std::string weight_;
};

}  // namespace dhm
