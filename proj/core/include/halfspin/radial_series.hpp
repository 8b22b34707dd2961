#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "halfspin/half_integer.hpp"
#include "halfspin/quantum_numbers.hpp"

namespace halfspin {

using Rational = boost::multiprecision::cpp_rational;

/// Terminating Frobenius solution
///   R(rho) = rho^s exp(-rho^2 / 2) sum_{k=0}^{N/2} a_{2k} rho^{2k},  s = 2|m|,
/// with a_0 = 1. Odd-index coefficients vanish identically and are not stored.
class RadialSeries {
 public:
  const QuantumNumbers& quantum_numbers() const noexcept { return qn_; }
  int exponent() const noexcept { return qn_.exponent(); }

  /// a_0, a_2, ..., a_N in exact arithmetic.
  std::span<const Rational> exact_coefficients() const noexcept { return exact_; }
  /// Same coefficients rounded once to double.
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  /// a_{N+2} as produced by the recursion; zero for every admissible tuple.
  const Rational& next_coefficient() const noexcept { return next_; }

  friend RadialSeries recursion_coefficients(const QuantumNumbers& qn);

 private:
  RadialSeries(QuantumNumbers qn, std::vector<Rational> exact, Rational next);

  QuantumNumbers qn_;
  std::vector<Rational> exact_;
  std::vector<double> coeffs_;
  Rational next_;
};

/// Ratio a_{n+2} / a_n of the two-step recursion with s = 2|m|:
///   2[(1 + s + n) - lambda] / [(n + s + 2)^2 - 4 m^2].
Rational recursion_ratio(int lambda, HalfInteger abs_m, int n);

/// Builds a_0 = 1, a_2, ..., a_N by the recursion and records a_{N+2}.
RadialSeries recursion_coefficients(const QuantumNumbers& qn);

/// First `count` even-index coefficients for odd lambda, where the series
/// never terminates. Errors: EvenLambda, InvalidArgument (count < 1, 2m even).
std::vector<Rational> nonterminating_prefix_exact(int lambda, HalfInteger m, int count);
std::vector<double> nonterminating_prefix(int lambda, HalfInteger m, int count);

/// Unnormalized R(rho). Requires rho >= 0.
double eval_radial(const RadialSeries& series, double rho);

}  // namespace halfspin
