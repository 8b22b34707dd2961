#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "halfspin/error.hpp"
#include "halfspin/operator_set.hpp"

namespace halfspin {
namespace {

TEST(OperatorSet, Dimensions) {
  const auto ops = OperatorSet::build(2);
  EXPECT_EQ(ops.dim(), 6);
  EXPECT_EQ(ops.interior_dim(), 1);
  EXPECT_EQ(OperatorSet::build(8).dim(), 45);
  EXPECT_EQ(OperatorSet::build(8).interior_dim(), 28);
}

TEST(OperatorSet, BasisOrdering) {
  const auto ops = OperatorSet::build(3);
  const std::vector<BasisState> expected = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1},
                                            {2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}};
  EXPECT_EQ(ops.basis(), expected);
}

TEST(OperatorSet, CutoffTooSmall) {
  try {
    OperatorSet::build(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CutoffTooSmall);
  }
  const auto ops = OperatorSet::build(3);
  EXPECT_THROW(verify_identity(ops), Error);
}

TEST(OperatorSet, CanonicalCommutatorOnInterior) {
  const Constants c(1.7, 2.0);
  const auto ops = OperatorSet::build(6, c);
  const OperatorSet::Matrix comm = ops.x() * ops.px() - ops.px() * ops.x();
  const auto n = ops.dim() - 7;  // drop the top shell
  const OperatorSet::Matrix expected =
      std::complex<double>(0.0, c.hbar()) * OperatorSet::Matrix::Identity(n, n);
  EXPECT_LT((comm.topLeftCorner(n, n) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

class OperatorSetGamma : public ::testing::TestWithParam<double> {};

TEST_P(OperatorSetGamma, Hermitian) {
  EXPECT_LT(hermiticity_defect(OperatorSet::build(8, Constants(1.0, GetParam()))), 1e-12);
}

TEST_P(OperatorSetGamma, S0CommutesWithS3) {
  EXPECT_LT(commutator_defect(OperatorSet::build(8, Constants(1.0, GetParam()))), 1e-12);
}

TEST_P(OperatorSetGamma, IdentityOnInteriorBlock) {
  const auto ops = OperatorSet::build(8, Constants(1.0, GetParam()));
  EXPECT_LT(verify_identity(ops), 1e-10);
}

TEST_P(OperatorSetGamma, S0SpectrumIsOscillator) {
  const auto ops = OperatorSet::build(8, Constants(1.0, GetParam()));
  const auto values = s0_interior_spectrum(ops);
  std::size_t k = 0;
  for (int n = 0; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d, ++k) {
      ASSERT_LT(k, values.size());
      EXPECT_NEAR(values[k], n + 1.0, 1e-10 * (n + 1.0));
    }
  }
  EXPECT_EQ(k, values.size());
}

TEST_P(OperatorSetGamma, JointEigenvalueRelation) {
  const auto ops = OperatorSet::build(8, Constants(1.0, GetParam()));
  for (const auto& p : joint_spectrum(ops)) {
    EXPECT_NEAR(p.s2, (p.lambda * p.lambda - 1.0) / 4.0, 1e-9);
    EXPECT_LT(p.s2_residual, 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Gammas, OperatorSetGamma, ::testing::Values(0.5, 1.0, 2.0, 5.0));

TEST(OperatorSet, IdentityWithNonUnitHbar) {
  const auto ops = OperatorSet::build(8, Constants(0.8, 3.0));
  EXPECT_LT(verify_identity(ops), 1e-10 * 0.64);
  for (const auto& p : joint_spectrum(ops)) {
    EXPECT_NEAR(p.s2, (p.lambda * p.lambda - 1.0) / 4.0, 1e-9);
  }
}

// Truncation corrupts the top shells: the identity fails there at O(hbar^2).
TEST(OperatorSet, FullBlockIsNegativeControl) {
  const auto ops = OperatorSet::build(8);
  const double full = verify_identity(ops, Block::Full);
  EXPECT_GT(full, 0.1);
}

// The literal square of the bracket equals S0^2/4; it misses the identity by
// exactly hbar^2/4.
TEST(OperatorSet, LiteralSquareMissesShift) {
  const auto ops = OperatorSet::build(8, Constants(1.0, 2.0));
  EXPECT_NEAR(identity_defect(ops, ops.s2_literal_square()), 0.25, 1e-10);
  const OperatorSet::Matrix diff =
      ops.restrict(ops.s2_literal_square() - 0.25 * ops.s0() * ops.s0(), Block::Interior);
  EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-10);
}

std::map<int, std::multiset<int>> sectors(const std::vector<JointEigenpair>& pairs) {
  std::map<int, std::multiset<int>> out;
  for (const auto& p : pairs) {
    out[static_cast<int>(std::lround(p.lambda))].insert(static_cast<int>(std::lround(2.0 * p.m)));
  }
  return out;
}

TEST(JointSpectrum, SectorsNmax6) {
  const auto pairs = joint_spectrum(OperatorSet::build(6));
  const auto by_lambda = sectors(pairs);
  EXPECT_EQ(by_lambda.at(2), (std::multiset<int>{-1, 1}));
  EXPECT_EQ(by_lambda.at(4), (std::multiset<int>{-3, -1, 1, 3}));
  for (const auto& p : pairs) {
    if (std::lround(p.lambda) == 2) EXPECT_NEAR(p.s2, 0.75, 1e-9);
  }
  // 2m runs over -n, -n+2, ..., n in sector lambda = n + 1.
  for (const auto& [lambda, ms] : by_lambda) {
    std::multiset<int> expected;
    for (int t = -(lambda - 1); t <= lambda - 1; t += 2) expected.insert(t);
    EXPECT_EQ(ms, expected) << "lambda=" << lambda;
  }
}

TEST(JointSpectrum, SortedAndComplete) {
  const auto ops = OperatorSet::build(8);
  const auto pairs = joint_spectrum(ops);
  EXPECT_EQ(static_cast<Eigen::Index>(pairs.size()), ops.interior_dim());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const bool ordered = pairs[i - 1].lambda < pairs[i].lambda - 0.5 ||
                         (std::abs(pairs[i - 1].lambda - pairs[i].lambda) < 0.5 &&
                          pairs[i - 1].m <= pairs[i].m);
    EXPECT_TRUE(ordered);
  }
  for (const auto& p : pairs) {
    EXPECT_NEAR(p.lambda, std::round(p.lambda), 1e-10);
    EXPECT_NEAR(2.0 * p.m, std::round(2.0 * p.m), 1e-10);
  }
}

}  // namespace
}  // namespace halfspin
