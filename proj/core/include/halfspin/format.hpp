#pragma once

#include <string>

namespace halfspin {

/// 12 significant digits, shortest of fixed/scientific, lowercase exponent.
std::string format_real(double value);

}  // namespace halfspin
