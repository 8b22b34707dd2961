#pragma once

#include <vector>

namespace halfspin {

/// Uniform grid on [0, rho_max] with npoints intervals. The interior nodes
/// rho_i = i * spacing, i = 1..npoints-1, carry the unknowns of the
/// finite-difference problem; both endpoints are Dirichlet boundaries.
class RadialGrid {
 public:
  static constexpr int kMinPoints = 100;

  /// Reference grid for the acceptance checks.
  static RadialGrid reference() { return RadialGrid(12.0, 2000); }

  /// Errors: GridTooCoarse if npoints < 100; InvalidGrid if rho_max is not
  /// finite and positive.
  RadialGrid(double rho_max, int npoints);

  double rho_max() const noexcept { return rho_max_; }
  int npoints() const noexcept { return npoints_; }
  double spacing() const noexcept { return rho_max_ / npoints_; }

  int interior_count() const noexcept { return npoints_ - 1; }
  /// rho_i for i in [0, npoints].
  double node(int i) const noexcept { return i * spacing(); }
  std::vector<double> interior_nodes() const;

  /// rho_max >= 2 sqrt(lambda).
  bool covers(double lambda) const noexcept;

 private:
  double rho_max_;
  int npoints_;
};

}  // namespace halfspin
