#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cryptsteg {

enum class ErrorCode {
  InvalidKey,
  InvalidParameter,
  DegenerateOrbit,
  LengthMismatch,
  CapacityExceeded,
  MalformedHeader,
  UnsupportedFormat,
  UnsupportedDepth,
  DecodeError,
  IoError,
  ShapeMismatch,
  TooFewBits,
  PrerequisiteFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// Messages never contain key material.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cryptsteg
