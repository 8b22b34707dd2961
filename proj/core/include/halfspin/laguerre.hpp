#pragma once

#include "halfspin/quantum_numbers.hpp"

namespace halfspin {

/// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the three-term
/// recurrence
///   (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
double generalized_laguerre(int n, double alpha, double x);

/// Closed-form radial solution rho^{2|m|} exp(-rho^2/2) L_{N/2}^{(2|m|)}(rho^2).
/// Shares no code with the Frobenius recursion; used to cross-check it.
double laguerre_oracle(const QuantumNumbers& qn, double rho);

}  // namespace halfspin
