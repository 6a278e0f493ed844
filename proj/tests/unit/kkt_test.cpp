// Copyright 2026 The superadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "superadmm/kkt.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "corpora.hpp"
#include "oracles.hpp"

namespace superadmm {
namespace {

using ::std::vector;
using testing::symmetric_from_upper;
using testing::to_eigen;

KktMatrix scalar_kkt() {
  return assemble_kkt(SparseMatrix::identity(1, 2.0), SparseMatrix::identity(1),
                      1.0, vector<double>{1.0});
}

TEST(AssembleKkt, ScalarExample) {
  const KktMatrix kkt = scalar_kkt();
  Eigen::Matrix2d expected;
  expected << 3, 1, 1, -1;
  EXPECT_EQ(symmetric_from_upper(kkt.upper), Eigen::MatrixXd(expected));
  EXPECT_TRUE(kkt.upper.is_canonical());
  EXPECT_EQ(kkt.dim(), 2);
}

TEST(AssembleKkt, NoConstraintsGivesShiftedHessian) {
  const SparseMatrix P = upper_triangle(
      SparseMatrix::from_dense(2, 2, vector<double>{4, 1, 1, 3}));
  const KktMatrix kkt = assemble_kkt(P, SparseMatrix(0, 2), 0.5, {});
  Eigen::Matrix2d expected;
  expected << 4.5, 1, 1, 3.5;
  EXPECT_EQ(symmetric_from_upper(kkt.upper), Eigen::MatrixXd(expected));
}

TEST(AssembleKkt, ZeroHessianGetsExplicitDiagonal) {
  const KktMatrix kkt = assemble_kkt(SparseMatrix(2, 2), SparseMatrix::identity(2),
                                     1e-6, vector<double>{2.0, 4.0});
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected.diagonal() << 1e-6, 1e-6, -0.5, -0.25;
  expected(0, 2) = expected(2, 0) = 1.0;
  expected(1, 3) = expected(3, 1) = 1.0;
  EXPECT_EQ(symmetric_from_upper(kkt.upper), Eigen::MatrixXd(expected));
}

TEST(AssembleKkt, MatchesBlockFormulaOnRandomData) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const testing::RandomKkt r = testing::random_kkt(seed);
    const int n = r.kkt.n;
    const int m = r.kkt.m;
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(n + m, n + m);
    expected.topLeftCorner(n, n) = symmetric_from_upper(r.P_upper);
    expected.topLeftCorner(n, n).diagonal().array() += r.sigma;
    expected.bottomLeftCorner(m, n) = to_eigen(r.A);
    expected.topRightCorner(n, m) = to_eigen(r.A).transpose();
    for (int i = 0; i < m; ++i) expected(n + i, n + i) = -1.0 / r.rho[i];
    EXPECT_TRUE(r.kkt.upper.is_canonical());
    EXPECT_EQ((symmetric_from_upper(r.kkt.upper) - expected).cwiseAbs().maxCoeff(), 0.0)
        << "seed " << seed;
  }
}

TEST(UpdateKktPenalties, RewritesTrailingDiagonal) {
  KktMatrix kkt = scalar_kkt();
  update_kkt_penalties(kkt, vector<double>{500.0});
  EXPECT_EQ(kkt.upper.values[kkt.penalty_diag[0]], -0.002);
  update_kkt_penalties(kkt, vector<double>{1e8});
  EXPECT_EQ(kkt.upper.values[kkt.penalty_diag[0]], -1e-8);
}

TEST(UpdateKktPenalties, SamePenaltiesLeaveValuesUntouched) {
  KktMatrix kkt = assemble_kkt(SparseMatrix::identity(2), SparseMatrix::identity(2),
                               1e-6, vector<double>{3.0, 7.0});
  const KktMatrix before = kkt;
  update_kkt_penalties(kkt, vector<double>{3.0, 7.0});
  EXPECT_EQ(kkt.upper, before.upper);
}

TEST(KktResidual, ExactSolutionIsTiny) {
  const KktMatrix kkt = scalar_kkt();
  const vector<double> rhs{1.0, 0.0};
  EXPECT_LE(kkt_residual_inf_norm(kkt, vector<double>{0.25, 0.25}, rhs),
            1e-12 * 1.0);
}

TEST(KktResidual, IdentityWithZeroSolution) {
  KktMatrix kkt;
  kkt.n = 2;
  kkt.upper = SparseMatrix::identity(2);
  EXPECT_EQ(kkt_residual_inf_norm(kkt, vector<double>{0, 0}, vector<double>{2, -3}),
            3.0);
}

TEST(KktResidual, DirectMultiply) {
  EXPECT_EQ(kkt_residual_inf_norm(scalar_kkt(), vector<double>{1, 0},
                                  vector<double>{0, 0}),
            3.0);
}

}  // namespace
}  // namespace superadmm
