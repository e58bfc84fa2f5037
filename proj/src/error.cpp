#include "cryptsteg/error.hpp"

namespace cryptsteg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidKey: return "InvalidKey";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::UnsupportedDepth: return "UnsupportedDepth";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TooFewBits: return "TooFewBits";
    case ErrorCode::PrerequisiteFailed: return "PrerequisiteFailed";
  }
  return "Unknown";
}

}  // namespace cryptsteg
