#pragma once

#include <span>
#include <vector>

#include "halfspin/half_integer.hpp"
#include "halfspin/quantum_numbers.hpp"
#include "halfspin/radial_grid.hpp"
#include "halfspin/radial_series.hpp"

namespace halfspin {

struct FdEigenpair {
  double lambda = 0.0;
  /// u = sqrt(rho) R on the interior nodes, normalized so sum u_i^2 h = 1.
  std::vector<double> u;
};

/// Lowest `count` eigenpairs of
///   -(1/rho) d/drho(rho dR/drho) + (rho^2 + 4m^2/rho^2) R = 2 lambda R
/// discretized through u = sqrt(rho) R, which gives the symmetric problem
///   -u'' + (rho^2 + (4m^2 - 1/4) / rho^2) u = 2 lambda u
/// on a three-point stencil with u = 0 at both ends.
/// Errors: GridTooCoarse (grid), InvalidArgument (count < 1 or too large).
std::vector<FdEigenpair> fd_eigensolve(HalfInteger abs_m, const RadialGrid& grid, int count);

/// Max over interior nodes of |R_series - R_fd| with both normalized to
/// integral R^2 rho drho = 1 and R_fd = u / sqrt(rho) sign-aligned to the
/// series.
double series_fd_deviation(const RadialSeries& series, const RadialGrid& grid,
                           std::span<const double> fd_u);

/// Solves the FD problem for |m| and picks the eigenvector with the same
/// radial order as qn. Errors: as fd_eigensolve; InvalidGrid if the grid
/// does not cover lambda.
double compare_series_vs_fd(const QuantumNumbers& qn, const RadialGrid& grid);

}  // namespace halfspin
