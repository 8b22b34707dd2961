#pragma once

#include "halfspin/half_integer.hpp"

namespace halfspin {

/// An admissible (lambda, ell, m, N) tuple. Only obtainable through
/// validate(), so every instance satisfies
///   ell = (lambda - 1) / 2,  |m| <= ell,  N = lambda - 1 - 2|m| even >= 0,
///   lambda even,  2m odd.
class QuantumNumbers {
 public:
  int lambda() const noexcept { return lambda_; }
  HalfInteger ell() const noexcept { return HalfInteger::from_twice(lambda_ - 1); }
  HalfInteger m() const noexcept { return m_; }
  HalfInteger abs_m() const noexcept { return m_.abs(); }
  /// Series cutoff N.
  int big_n() const noexcept { return lambda_ - 1 - m_.abs().twice(); }
  /// Frobenius exponent s = 2|m|.
  int exponent() const noexcept { return m_.abs().twice(); }
  /// Number of radial nodes, N / 2 = ell - |m|.
  int radial_order() const noexcept { return big_n() / 2; }

  friend QuantumNumbers validate(int lambda, HalfInteger m);

  bool operator==(const QuantumNumbers&) const = default;

 private:
  QuantumNumbers(int lambda, HalfInteger m) : lambda_(lambda), m_(m) {}

  int lambda_;
  HalfInteger m_;
};

/// Checks admissibility and derives ell and N.
/// Errors: InvalidLambda (lambda < 1), NotHalfInteger (2m even),
/// OddLambda (series cannot terminate), MagneticOutOfRange (|m| > ell).
QuantumNumbers validate(int lambda, HalfInteger m);

}  // namespace halfspin
