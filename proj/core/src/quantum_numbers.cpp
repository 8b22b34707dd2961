#include "halfspin/quantum_numbers.hpp"

#include <string>

#include "halfspin/error.hpp"

namespace halfspin {

QuantumNumbers validate(int lambda, HalfInteger m) {
  if (lambda < 1) {
    throw Error(ErrorCode::InvalidLambda,
                "lambda must be >= 1, got " + std::to_string(lambda));
  }
  if (!m.is_half_integral()) {
    throw Error(ErrorCode::NotHalfInteger,
                "m must be half-integral (2m odd), got 2m=" + std::to_string(m.twice()));
  }
  if (lambda % 2 != 0) {
    throw Error(ErrorCode::OddLambda,
                "lambda=" + std::to_string(lambda) +
                    " is odd; the radial series does not terminate");
  }
  if (m.abs().twice() > lambda - 1) {
    throw Error(ErrorCode::MagneticOutOfRange,
                "|m|=" + m.abs().str() + " exceeds ell=" +
                    HalfInteger::from_twice(lambda - 1).str());
  }
  return QuantumNumbers(lambda, m);
}

}  // namespace halfspin
