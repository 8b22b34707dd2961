#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halfspin {

enum class ErrorCode {
  InvalidLambda,
  NotHalfInteger,
  OddLambda,
  MagneticOutOfRange,
  InvalidConstants,
  EvenLambda,
  BadBound,
  IntegerEll,
  CutoffTooSmall,
  DegeneracyResolutionFailed,
  GridTooCoarse,
  InvalidGrid,
  InvalidArgument,
};

/// Stable identifier used in diagnostics, e.g. "OddLambda".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace halfspin
