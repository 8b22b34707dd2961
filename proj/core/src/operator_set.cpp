#include "halfspin/operator_set.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "halfspin/error.hpp"

namespace halfspin {

namespace {

using Matrix = OperatorSet::Matrix;
using Complex = std::complex<double>;

constexpr double kClusterTolerance = 1e-6;
constexpr double kJointResidualTolerance = 1e-8;

std::vector<BasisState> make_basis(int nmax) {
  std::vector<BasisState> basis;
  for (int n = 0; n <= nmax; ++n) {
    for (int nx = n; nx >= 0; --nx) basis.push_back({nx, n - nx});
  }
  std::stable_sort(basis.begin(), basis.end(), [](const BasisState& a, const BasisState& b) {
    return a.total() != b.total() ? a.total() < b.total() : a.nx < b.nx;
  });
  return basis;
}

Eigen::Index index_of(const std::vector<BasisState>& basis, BasisState s) {
  const auto it = std::find(basis.begin(), basis.end(), s);
  return it == basis.end() ? -1 : static_cast<Eigen::Index>(it - basis.begin());
}

// Annihilation operator on mode x (axis = 0) or y (axis = 1).
Matrix lowering(const std::vector<BasisState>& basis, int axis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix a = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    BasisState s = basis[static_cast<std::size_t>(j)];
    int& n = axis == 0 ? s.nx : s.ny;
    if (n == 0) continue;
    const double amplitude = std::sqrt(static_cast<double>(n));
    --n;
    a(index_of(basis, s), j) = amplitude;
  }
  return a;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Product of two operators acting on different modes. They commute in the
// full space; the symmetric form keeps the truncated matrix Hermitian.
Matrix commuting_product(const Matrix& a, const Matrix& b) { return 0.5 * (a * b + b * a); }

}  // namespace

OperatorSet OperatorSet::build(int nmax, const Constants& constants) {
  if (nmax < 2) {
    throw Error(ErrorCode::CutoffTooSmall,
                "nmax must be >= 2, got " + std::to_string(nmax));
  }
  OperatorSet ops;
  ops.nmax_ = nmax;
  ops.constants_ = constants;
  ops.basis_ = make_basis(nmax);

  const double hbar = constants.hbar();
  const double gamma = constants.gamma();
  const double xscale = std::sqrt(hbar / (2.0 * gamma));
  const double pscale = std::sqrt(hbar * gamma / 2.0);
  const Complex i(0.0, 1.0);

  const Matrix ax = lowering(ops.basis_, 0);
  const Matrix ay = lowering(ops.basis_, 1);
  ops.x_ = xscale * (ax + ax.adjoint());
  ops.y_ = xscale * (ay + ay.adjoint());
  ops.px_ = i * pscale * (ax.adjoint() - ax);
  ops.py_ = i * pscale * (ay.adjoint() - ay);

  const Matrix x2 = ops.x_ * ops.x_;
  const Matrix y2 = ops.y_ * ops.y_;
  const Matrix px2 = ops.px_ * ops.px_;
  const Matrix py2 = ops.py_ * ops.py_;

  ops.s0_ = 0.5 * (gamma * (x2 + y2) + (px2 + py2) / gamma);
  ops.s3_ = 0.5 * (commuting_product(ops.x_, ops.py_) - commuting_product(ops.y_, ops.px_));

  const Matrix q1 = 0.25 * (gamma * (x2 - y2) + (px2 - py2) / gamma);
  const Matrix q2 = 0.5 * (gamma * commuting_product(ops.x_, ops.y_) +
                           commuting_product(ops.px_, ops.py_) / gamma);
  ops.s2_ = ops.s3_ * ops.s3_ + q1 * q1 + q2 * q2;

  const Matrix bracket = (px2 + py2) + gamma * gamma * (x2 + y2);
  ops.s2_literal_ = bracket * bracket / (16.0 * gamma * gamma);
  return ops;
}

Eigen::Index OperatorSet::interior_dim() const noexcept {
  const Eigen::Index top = nmax_ - 2;
  return top < 0 ? 0 : (top + 1) * (top + 2) / 2;
}

OperatorSet::Matrix OperatorSet::restrict(const Matrix& m, Block block) const {
  const Eigen::Index n = block == Block::Interior ? interior_dim() : dim();
  return m.topLeftCorner(n, n);
}

double hermiticity_defect(const OperatorSet& ops) {
  double worst = 0.0;
  for (const Matrix* m : {&ops.x(), &ops.y(), &ops.px(), &ops.py(), &ops.s0(), &ops.s3(),
                          &ops.s2()}) {
    worst = std::max(worst, max_abs(*m - m->adjoint()));
  }
  return worst;
}

double commutator_defect(const OperatorSet& ops, Block block) {
  const Matrix c = ops.s0() * ops.s3() - ops.s3() * ops.s0();
  return max_abs(ops.restrict(c, block));
}

double identity_defect(const OperatorSet& ops, const OperatorSet::Matrix& candidate,
                       Block block) {
  const double hbar = ops.constants().hbar();
  const Matrix target =
      0.25 * ops.s0() * ops.s0() - 0.25 * hbar * hbar * Matrix::Identity(ops.dim(), ops.dim());
  return max_abs(ops.restrict(candidate - target, block));
}

double verify_identity(const OperatorSet& ops, Block block) {
  if (ops.nmax() < 4) {
    throw Error(ErrorCode::CutoffTooSmall,
                "identity check needs nmax >= 4, got " + std::to_string(ops.nmax()));
  }
  return identity_defect(ops, ops.s2(), block);
}

std::vector<double> s0_interior_spectrum(const OperatorSet& ops) {
  const Matrix s0 = ops.restrict(ops.s0(), Block::Interior);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(s0, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::DegeneracyResolutionFailed, "S0 eigensolve failed");
  }
  std::vector<double> out;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    out.push_back(solver.eigenvalues()(k) / ops.constants().hbar());
  }
  return out;
}

std::vector<JointEigenpair> joint_spectrum(const OperatorSet& ops) {
  const double hbar = ops.constants().hbar();
  const Matrix s0 = ops.restrict(ops.s0(), Block::Interior);
  const Matrix s3 = ops.restrict(ops.s3(), Block::Interior);
  const Matrix s2 = ops.restrict(ops.s2(), Block::Interior);

  Eigen::SelfAdjointEigenSolver<Matrix> outer(s0);
  if (outer.info() != Eigen::Success) {
    throw Error(ErrorCode::DegeneracyResolutionFailed, "S0 eigensolve failed");
  }
  const auto& values = outer.eigenvalues();
  const Matrix& vectors = outer.eigenvectors();

  std::vector<JointEigenpair> pairs;
  Eigen::Index start = 0;
  while (start < values.size()) {
    Eigen::Index end = start + 1;
    while (end < values.size() &&
           std::abs(values(end) - values(start)) < kClusterTolerance * hbar) {
      ++end;
    }
    const Matrix basis = vectors.middleCols(start, end - start);
    const Matrix reduced = basis.adjoint() * s3 * basis;
    Eigen::SelfAdjointEigenSolver<Matrix> inner(reduced);
    if (inner.info() != Eigen::Success) {
      throw Error(ErrorCode::DegeneracyResolutionFailed,
                  "S3 eigensolve failed in sector lambda=" + std::to_string(values(start) / hbar));
    }
    const double lambda = values.segment(start, end - start).mean() / hbar;
    for (Eigen::Index k = 0; k < inner.eigenvalues().size(); ++k) {
      const Eigen::VectorXcd v = basis * inner.eigenvectors().col(k);
      const double m = inner.eigenvalues()(k);
      const double s3_residual = (s3 * v - m * v).norm();
      if (s3_residual > kJointResidualTolerance * hbar) {
        throw Error(ErrorCode::DegeneracyResolutionFailed,
                    "joint vector is not an S3 eigenvector (residual " +
                        std::to_string(s3_residual) + ")");
      }
      const Eigen::VectorXcd s2v = s2 * v;
      const double s2_value = v.dot(s2v).real();
      JointEigenpair pair;
      pair.lambda = lambda;
      pair.m = m / hbar;
      pair.s2 = s2_value / (hbar * hbar);
      pair.s2_residual = (s2v - s2_value * v).norm() / (hbar * hbar);
      pairs.push_back(pair);
    }
    start = end;
  }
  std::sort(pairs.begin(), pairs.end(), [](const JointEigenpair& a, const JointEigenpair& b) {
    if (std::abs(a.lambda - b.lambda) > 0.5) return a.lambda < b.lambda;
    return a.m < b.m;
  });
  return pairs;
}

}  // namespace halfspin
