#include "halfspin/format.hpp"

#include <cstdio>

namespace halfspin {

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value == 0.0 ? 0.0 : value);
  return buffer;
}

}  // namespace halfspin
