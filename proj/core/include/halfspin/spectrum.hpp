#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halfspin/constants.hpp"
#include "halfspin/half_integer.hpp"

namespace halfspin {

/// Which m values count as admissible. RelaxedIntegerM also admits integer m
/// (even 2m); it exists to show where the spectral gap comes from.
enum class Admissibility { HalfIntegral, RelaxedIntegerM };

/// A multiplicity cell as printed in the table: blank, a number, or infinity.
struct MultiplicityCell {
  enum class Kind { Unset, Finite, Infinite };

  Kind kind = Kind::Unset;
  int value = 0;

  static MultiplicityCell unset() { return {}; }
  static MultiplicityCell finite(int v) { return {Kind::Finite, v}; }
  static MultiplicityCell infinite() { return {Kind::Infinite, 0}; }

  bool operator==(const MultiplicityCell&) const = default;
};

struct SpectrumRow {
  int lambda = 0;
  HalfInteger ell;
  HalfInteger abs_m;
  /// lambda - 1 - 2|m|; printed for non-terminating rows as well.
  int big_n = 0;
  bool terminating = false;
  MultiplicityCell multiplicity;

  bool operator==(const SpectrumRow&) const = default;
};

/// Rows for lambda = 2..lambda_max in table order (lambda, then |m|
/// ascending). Only the last terminating row of a block carries the
/// multiplicity; non-terminating rows are marked infinite.
/// Errors: BadBound if lambda_max < 2.
std::vector<SpectrumRow> enumerate_table(int lambda_max,
                                         Admissibility rule = Admissibility::HalfIntegral);

/// 2 ell + 1. Errors: IntegerEll for integer ell, InvalidArgument for ell <= 0.
int multiplicity(HalfInteger ell);

/// Smallest lambda with a terminating row, found by enumeration.
int lambda_min(Admissibility rule = Admissibility::HalfIntegral);

/// lambda_min * hbar * omega.
double e_min(const Constants& constants);

/// Golden-file schema: a JSON list of
///   {lambda, ell_times2, absM_times2, bigN, multiplicity}
/// with multiplicity an integer, "inf", or null.
std::string table_to_json(std::span<const SpectrumRow> rows);
/// Errors: InvalidArgument on malformed input.
std::vector<SpectrumRow> table_from_json(std::string_view text);

}  // namespace halfspin
