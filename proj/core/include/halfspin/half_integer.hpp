#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace halfspin {

/// A value in (1/2)Z stored as twice its value, so parity and range checks
/// on spin quantum numbers stay in integer arithmetic.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) noexcept {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_integer(int value) noexcept {
    return from_twice(2 * value);
  }

  constexpr int twice() const noexcept { return twice_; }

  /// True when the value is an odd multiple of 1/2.
  constexpr bool is_half_integral() const noexcept { return twice_ % 2 != 0; }

  constexpr HalfInteger abs() const noexcept {
    return from_twice(twice_ < 0 ? -twice_ : twice_);
  }
  constexpr HalfInteger operator-() const noexcept { return from_twice(-twice_); }

  double to_double() const noexcept { return 0.5 * twice_; }

  /// "1/2", "-3/2", "2", ...
  std::string str() const;

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  int twice_ = 0;
};

}  // namespace halfspin
