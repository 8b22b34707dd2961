#include "halfspin/radial_series.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "halfspin/error.hpp"

namespace halfspin {

namespace {

std::vector<Rational> run_recursion(int lambda, HalfInteger abs_m, int count) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  Rational a = 1;
  for (int k = 0; k < count; ++k) {
    out.push_back(a);
    a *= recursion_ratio(lambda, abs_m, 2 * k);
  }
  return out;
}

}  // namespace

Rational recursion_ratio(int lambda, HalfInteger abs_m, int n) {
  const int s = abs_m.abs().twice();
  // (n + s + 2)^2 - (2|m|)^2 = (n + 2)(n + 2 + 2s) > 0 for n >= 0.
  const long long denominator =
      static_cast<long long>(n + 2) * static_cast<long long>(n + 2 + 2 * s);
  assert(denominator > 0);
  const long long numerator = 2LL * ((1LL + s + n) - lambda);
  return Rational(numerator, denominator);
}

RadialSeries::RadialSeries(QuantumNumbers qn, std::vector<Rational> exact, Rational next)
    : qn_(qn), exact_(std::move(exact)), next_(std::move(next)) {
  coeffs_.reserve(exact_.size());
  for (const auto& c : exact_) coeffs_.push_back(static_cast<double>(c));
}

RadialSeries recursion_coefficients(const QuantumNumbers& qn) {
  const int terms = qn.big_n() / 2 + 1;
  auto exact = run_recursion(qn.lambda(), qn.abs_m(), terms);
  Rational next = exact.back() * recursion_ratio(qn.lambda(), qn.abs_m(), qn.big_n());
  return RadialSeries(qn, std::move(exact), std::move(next));
}

std::vector<Rational> nonterminating_prefix_exact(int lambda, HalfInteger m, int count) {
  if (lambda % 2 == 0) {
    throw Error(ErrorCode::EvenLambda,
                "lambda=" + std::to_string(lambda) +
                    " is even; use recursion_coefficients for terminating series");
  }
  if (lambda < 1) {
    throw Error(ErrorCode::InvalidLambda, "lambda must be >= 1");
  }
  if (count < 1) {
    throw Error(ErrorCode::InvalidArgument, "count must be >= 1");
  }
  if (!m.is_half_integral()) {
    throw Error(ErrorCode::NotHalfInteger, "m must be half-integral");
  }
  return run_recursion(lambda, m.abs(), count);
}

std::vector<double> nonterminating_prefix(int lambda, HalfInteger m, int count) {
  const auto exact = nonterminating_prefix_exact(lambda, m, count);
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& c : exact) out.push_back(static_cast<double>(c));
  return out;
}

double eval_radial(const RadialSeries& series, double rho) {
  const auto a = series.coefficients();
  const double x = rho * rho;
  double poly = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) poly = poly * x + *it;
  return std::pow(rho, series.exponent()) * std::exp(-0.5 * x) * poly;
}

}  // namespace halfspin
