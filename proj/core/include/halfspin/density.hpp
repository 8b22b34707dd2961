#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "halfspin/constants.hpp"
#include "halfspin/quantum_numbers.hpp"
#include "halfspin/radial_grid.hpp"

namespace halfspin {

struct DensitySample {
  double rho = 0.0;
  double density = 0.0;
};

/// Density |psi|^2 = C^2 R(rho)^2 sampled at rho = 0, h, ..., rho_max, where
/// C is the physical normalization constant of the eigenfunction.
struct DensityProfile {
  QuantumNumbers qn;
  Constants constants;
  double norm_constant = 0.0;
  std::vector<DensitySample> samples;
  int ring_count = 0;
  /// Radii of the density maxima, in rho units, ascending.
  std::vector<double> peak_radii;
};

/// Relative floor below which a maximum is ignored.
inline constexpr double kPeakFloor = 1e-12;

/// Positive zeros of R in rho units, ascending: square roots of the zeros of
/// L_{N/2}^{(2|m|)}, from the eigenvalues of its Jacobi matrix.
std::vector<double> radial_nodes(const QuantumNumbers& qn);

/// Indices of strict three-point local maxima above kPeakFloor * max.
std::vector<std::size_t> local_maxima(std::span<const DensitySample> samples);

/// Errors: GridTooCoarse if the spacing exceeds half the smallest gap
/// between the origin and the radial nodes; InvalidGrid if rho_max does not
/// reach past 2 sqrt(lambda).
DensityProfile density_profile(const QuantumNumbers& qn, const Constants& constants,
                               const RadialGrid& grid);

/// Columns "rho,density", rho in dimensionless units.
void write_csv(std::ostream& out, const DensityProfile& profile);

}  // namespace halfspin
