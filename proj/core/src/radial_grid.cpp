#include "halfspin/radial_grid.hpp"

#include <cmath>
#include <string>

#include "halfspin/error.hpp"

namespace halfspin {

RadialGrid::RadialGrid(double rho_max, int npoints) : rho_max_(rho_max), npoints_(npoints) {
  if (!std::isfinite(rho_max) || rho_max <= 0.0) {
    throw Error(ErrorCode::InvalidGrid, "rho_max must be finite and positive");
  }
  if (npoints < kMinPoints) {
    throw Error(ErrorCode::GridTooCoarse,
                "npoints must be >= " + std::to_string(kMinPoints) + ", got " +
                    std::to_string(npoints));
  }
}

std::vector<double> RadialGrid::interior_nodes() const {
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(interior_count()));
  for (int i = 1; i < npoints_; ++i) nodes.push_back(node(i));
  return nodes;
}

bool RadialGrid::covers(double lambda) const noexcept {
  return rho_max_ >= 2.0 * std::sqrt(lambda);
}

}  // namespace halfspin
