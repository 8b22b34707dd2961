#include "halfspin/half_integer.hpp"

namespace halfspin {

std::string HalfInteger::str() const {
  if (!is_half_integral()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace halfspin
