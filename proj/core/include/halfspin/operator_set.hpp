#pragma once

#include <vector>

#include <Eigen/Dense>

#include "halfspin/constants.hpp"

namespace halfspin {

/// Two-mode oscillator number state |n_x, n_y>.
struct BasisState {
  int nx = 0;
  int ny = 0;
  int total() const noexcept { return nx + ny; }
  bool operator==(const BasisState&) const = default;
};

/// Which part of the truncated basis a check looks at. Quartic operators
/// are exact only on the interior block n_x + n_y <= nmax - 2.
enum class Block { Interior, Full };

/// Dense matrices of x, y, p_x, p_y and the spin operators in the truncated
/// basis {|n_x, n_y> : n_x + n_y <= nmax}, ordered by total n, then n_x.
///
///   x   = sqrt(hbar / 2 gamma) (a + a^dag)
///   p   = i sqrt(hbar gamma / 2) (a^dag - a)
///   S0  = (gamma (x^2 + y^2) + (p_x^2 + p_y^2) / gamma) / 2
///   S3  = (x p_y - y p_x) / 2
///   S^2 = S3^2 + Q1^2 + Q2^2, with
///         Q1 = (gamma (x^2 - y^2) + (p_x^2 - p_y^2) / gamma) / 4
///         Q2 = (gamma x y + p_x p_y / gamma) / 2
///
/// The three quadratic components have no ordering ambiguity and their
/// squares sum classically to (1/16)[gamma^2 r^4 + p^4 / gamma^2 + 2 r^2 p^2].
/// The literal operator square (p^2 + gamma^2 r^2)^2 / (16 gamma^2) is kept
/// separately; it equals S0^2 / 4 with no -hbar^2/4 shift.
class OperatorSet {
 public:
  using Matrix = Eigen::MatrixXcd;

  /// Errors: CutoffTooSmall if nmax < 2.
  static OperatorSet build(int nmax, const Constants& constants = {});

  int nmax() const noexcept { return nmax_; }
  Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(basis_.size()); }
  /// Number of states with n_x + n_y <= nmax - 2.
  Eigen::Index interior_dim() const noexcept;
  const std::vector<BasisState>& basis() const noexcept { return basis_; }
  const Constants& constants() const noexcept { return constants_; }

  const Matrix& x() const noexcept { return x_; }
  const Matrix& y() const noexcept { return y_; }
  const Matrix& px() const noexcept { return px_; }
  const Matrix& py() const noexcept { return py_; }
  const Matrix& s0() const noexcept { return s0_; }
  const Matrix& s3() const noexcept { return s3_; }
  const Matrix& s2() const noexcept { return s2_; }
  const Matrix& s2_literal_square() const noexcept { return s2_literal_; }

  /// Leading principal block for the given restriction.
  Matrix restrict(const Matrix& m, Block block) const;

 private:
  OperatorSet() = default;

  int nmax_ = 0;
  Constants constants_;
  std::vector<BasisState> basis_;
  Matrix x_, y_, px_, py_, s0_, s3_, s2_, s2_literal_;
};

/// Max |A_ij - conj(A_ji)| over all seven operators.
double hermiticity_defect(const OperatorSet& ops);

/// Max-norm of [S0, S3] on the requested block.
double commutator_defect(const OperatorSet& ops, Block block = Block::Interior);

/// Max-norm of candidate - (S0^2/4 - hbar^2/4 I) on the requested block.
double identity_defect(const OperatorSet& ops, const OperatorSet::Matrix& candidate,
                       Block block = Block::Interior);

/// identity_defect for S^2. Errors: CutoffTooSmall if nmax < 4.
double verify_identity(const OperatorSet& ops, Block block = Block::Interior);

/// Ascending S0 eigenvalues on the interior block, in units of hbar.
std::vector<double> s0_interior_spectrum(const OperatorSet& ops);

struct JointEigenpair {
  double lambda = 0.0;  ///< S0 eigenvalue / hbar
  double m = 0.0;       ///< S3 eigenvalue / hbar
  double s2 = 0.0;      ///< <v|S^2|v> / hbar^2
  double s2_residual = 0.0;  ///< ||S^2 v - s2 v|| / hbar^2
};

/// Diagonalizes S0 on the interior block, then S3 inside each degenerate
/// S0 eigenspace. Sorted by lambda, then m.
/// Errors: DegeneracyResolutionFailed if an eigensolve fails or a joint
/// vector is not an S3 eigenvector to 1e-8 hbar.
std::vector<JointEigenpair> joint_spectrum(const OperatorSet& ops);

}  // namespace halfspin
