#include "halfspin/error.hpp"

namespace halfspin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::NotHalfInteger: return "NotHalfInteger";
    case ErrorCode::OddLambda: return "OddLambda";
    case ErrorCode::MagneticOutOfRange: return "MagneticOutOfRange";
    case ErrorCode::InvalidConstants: return "InvalidConstants";
    case ErrorCode::EvenLambda: return "EvenLambda";
    case ErrorCode::BadBound: return "BadBound";
    case ErrorCode::IntegerEll: return "IntegerEll";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::DegeneracyResolutionFailed: return "DegeneracyResolutionFailed";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace halfspin
