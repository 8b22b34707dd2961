#include "halfspin/laguerre.hpp"

#include <cmath>

namespace halfspin {

double generalized_laguerre(int n, double alpha, double x) {
  if (n <= 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double laguerre_oracle(const QuantumNumbers& qn, double rho) {
  const int s = qn.exponent();
  const double x = rho * rho;
  return std::pow(rho, s) * std::exp(-0.5 * x) *
         generalized_laguerre(qn.radial_order(), static_cast<double>(s), x);
}

}  // namespace halfspin
