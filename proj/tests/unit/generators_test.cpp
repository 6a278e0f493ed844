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


#include "superadmm/generators.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superadmm/solver.hpp"

namespace superadmm {
namespace {

DenseMatrix scalar(double v) {
  DenseMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

double nonzero_fraction(const SparseMatrix& a) {
  return static_cast<double>(a.nnz()) / (static_cast<double>(a.nrows) * a.ncols);
}

// Columns [first, first + count) of rows [0, rows) of a, as a new matrix.
SparseMatrix column_block(const SparseMatrix& a, Index rows, Index first,
                          Index count) {
  SparseMatrix out(rows, count);
  for (Index j = 0; j < count; ++j) {
    for (Index p = a.colptr[first + j]; p < a.colptr[first + j + 1]; ++p) {
      if (a.rowidx[p] >= rows) continue;
      out.rowidx.push_back(a.rowidx[p]);
      out.values.push_back(a.values[p]);
    }
    out.colptr[j + 1] = static_cast<Index>(out.rowidx.size());
  }
  return out;
}

TEST(SolveDare, NilpotentDynamicsReturnStateWeight) {
  DenseMatrix A(2, 2);
  DenseMatrix B(2, 1);
  B(0, 0) = 1.0;
  B(1, 0) = -0.5;
  DenseMatrix Q(2, 2);
  Q(0, 0) = 3.0;
  Q(1, 1) = 0.7;
  const DenseMatrix P = solve_dare(A, B, Q, scalar(0.1));
  EXPECT_EQ(P.data, Q.data);
}

TEST(SolveDare, ScalarFixedPoint) {
  // Root of P^2 - 0.925 P - 0.1 = 0, the scalar Riccati fixed point.
  const double expected = 0.5 * (0.925 + std::sqrt(0.925 * 0.925 + 0.4));
  EXPECT_NEAR(expected, 1.0227733707753743, 1e-15);
  const DenseMatrix P = solve_dare(scalar(0.5), scalar(1.0), scalar(1.0), scalar(0.1));
  EXPECT_NEAR(P(0, 0), expected, 1e-9);
  EXPECT_NEAR(P(0, 0), 0.25 * P(0, 0) - 0.25 * P(0, 0) * P(0, 0) / (0.1 + P(0, 0)) + 1.0,
              1e-9);
}

TEST(SolveDare, OutputIsExactlySymmetric) {
  DenseMatrix A(3, 3);
  DenseMatrix B(3, 2);
  DenseMatrix Q(3, 3);
  DenseMatrix R(2, 2);
  const double a[9] = {0.9, 0.2, -0.1, 0.05, 1.1, 0.3, -0.2, 0.1, 0.8};
  for (int i = 0; i < 9; ++i) A.data[i] = a[i];
  B(0, 0) = 1.0;
  B(1, 1) = 1.0;
  B(2, 0) = 0.3;
  for (int i = 0; i < 3; ++i) Q(i, i) = 1.0 + i;
  R(0, 0) = R(1, 1) = 0.1;
  const DenseMatrix P = solve_dare(A, B, Q, R);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(P(i, j), P(j, i));
  }
}

TEST(GenMpc, SmallestDimensions) {
  const QpProblem p = gen_mpc(2, 1, 0);
  EXPECT_EQ(p.n, 5);
  EXPECT_EQ(p.m, 7);
  int equalities = 0;
  for (Index i = 0; i < p.m; ++i) equalities += p.l[i] == p.u[i];
  EXPECT_EQ(equalities, 4);
}

TEST(GenMpc, TenStatesTenStages) {
  const QpProblem p = gen_mpc(10, 10, 1);
  EXPECT_EQ(p.n, 160);
  EXPECT_EQ(p.m, 260);
}

TEST(GenMpc, InitialStateInsideStateBox) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const int nx = 4;
    const int horizon = 3;
    const QpProblem p = gen_mpc(nx, horizon, seed);
    // Rows: nx initial-state equalities, horizon * nx dynamics rows, then
    // the state box of stage 1 first.
    const Index box = nx + horizon * nx;
    for (int r = 0; r < nx; ++r) {
      EXPECT_LT(std::fabs(p.l[r]), p.u[box + r]);
      EXPECT_EQ(p.l[box + r], -p.u[box + r]);
    }
  }
}

TEST(GenMpc, Deterministic) {
  EXPECT_EQ(gen_mpc(6, 4, 11), gen_mpc(6, 4, 11));
  EXPECT_NE(gen_mpc(6, 4, 11), gen_mpc(6, 4, 12));
}

TEST(GenMpc, RejectsOddStateDimension) {
  EXPECT_THROW(gen_mpc(3, 2, 0), GeneratorError);
  EXPECT_THROW(gen_mpc(2, 0, 0), GeneratorError);
}

TEST(GenLasso, Dimensions) {
  const QpProblem one = gen_lasso(1, 0);
  EXPECT_EQ(one.n, 102);
  EXPECT_EQ(one.m, 102);
  const QpProblem ten = gen_lasso(10, 7);
  EXPECT_EQ(ten.n, 1020);
  EXPECT_EQ(ten.m, 1020);
  int equalities = 0;
  for (Index i = 0; i < ten.m; ++i) equalities += ten.l[i] == ten.u[i];
  EXPECT_EQ(equalities, 1000);
}

TEST(GenLasso, PenaltyMatchesEmittedData) {
  const int n = 10;
  const int md = 1000;
  const QpProblem p = gen_lasso(n, 7);
  const SparseMatrix neg_ad = column_block(p.A, md, md, n);
  EXPECT_GE(nonzero_fraction(neg_ad), 0.13);
  EXPECT_LE(nonzero_fraction(neg_ad), 0.17);
  double lambda = 0.0;
  for (Index j = 0; j < n; ++j) {
    double s = 0.0;
    for (Index p2 = neg_ad.colptr[j]; p2 < neg_ad.colptr[j + 1]; ++p2) {
      s += (-neg_ad.values[p2]) * (-p.l[neg_ad.rowidx[p2]]);
    }
    lambda = std::max(lambda, std::fabs(s));
  }
  lambda *= 0.2;
  for (Index j = 0; j < n; ++j) EXPECT_EQ(p.q[md + n + j], lambda);
}

TEST(GenLasso, Deterministic) { EXPECT_EQ(gen_lasso(3, 5), gen_lasso(3, 5)); }

TEST(GenHuber, Dimensions) {
  const QpProblem p = gen_huber(1, 0);
  EXPECT_EQ(p.n, 301);
  EXPECT_EQ(p.m, 300);
  int equalities = 0;
  int nonneg = 0;
  for (Index i = 0; i < p.m; ++i) {
    equalities += p.l[i] == p.u[i];
    nonneg += p.l[i] == 0.0 && std::isinf(p.u[i]);
  }
  EXPECT_EQ(equalities, 100);
  EXPECT_EQ(nonneg, 200);
}

TEST(GenHuber, DataDensity) {
  const QpProblem p = gen_huber(4, 2);
  EXPECT_GE(nonzero_fraction(column_block(p.A, 400, 0, 4)), 0.13);
  EXPECT_LE(nonzero_fraction(column_block(p.A, 400, 0, 4)), 0.17);
}

TEST(GenHuber, TinyInstanceMatchesHuberLoss) {
  // Three data points; seed chosen so the single data column is not empty.
  const int md = 3;
  std::uint64_t seed = 0;
  QpProblem p = gen_huber(1, seed, md);
  while (p.A.colptr[1] == 0) p = gen_huber(1, ++seed, md);

  std::vector<double> a(md, 0.0);
  std::vector<double> b(md);
  for (Index q = p.A.colptr[0]; q < p.A.colptr[1]; ++q) a[p.A.rowidx[q]] = p.A.values[q];
  for (int i = 0; i < md; ++i) b[i] = p.l[i];

  const SolveResult r = solve(p);
  ASSERT_EQ(r.status, Status::kSolved);
  const double x_star = testing::huber_minimizer_1d(a, b, 1.0);
  const double f_star = testing::huber_loss_1d(a, b, 1.0, x_star);
  EXPECT_NEAR(objective_value(p, r.x), f_star, 1e-6 * (1.0 + std::fabs(f_star)));
  EXPECT_NEAR(r.x[0], x_star, 1e-5);
  for (int i = 0; i < md; ++i) {
    const double ri = r.x[1 + md + i];
    const double si = r.x[1 + 2 * md + i];
    EXPECT_LE(ri * si, 1e-6) << "point " << i;
  }
}

TEST(GenRandomQp, DimensionsAndCurvature) {
  const QpProblem p = gen_random_qp(200, 300, 4);
  EXPECT_EQ(p.n, 200);
  EXPECT_EQ(p.m, 300);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
      testing::symmetric_from_upper(p.P), Eigen::EigenvaluesOnly);
  EXPECT_GE(eig.eigenvalues().minCoeff(), 1e-2 - 1e-12);
}

TEST(GenRandomQp, OriginIsFeasible) {
  const QpProblem p = gen_random_qp(20, 30, 9);
  for (Index i = 0; i < p.m; ++i) {
    EXPECT_LE(p.l[i], 0.0);
    EXPECT_GE(p.u[i], 0.0);
  }
}

TEST(GenRandomQp, Deterministic) {
  EXPECT_EQ(gen_random_qp(20, 30, 9), gen_random_qp(20, 30, 9));
  EXPECT_NE(gen_random_qp(20, 30, 9), gen_random_qp(20, 30, 10));
}

TEST(Generate, DispatchesByFamily) {
  GeneratorSpec spec;
  spec.family = Family::kMpc;
  spec.nx = 2;
  spec.horizon = 1;
  spec.seed = 3;
  EXPECT_EQ(generate(spec), gen_mpc(2, 1, 3));
  spec.family = Family::kRandom;
  spec.n = 5;
  spec.m = 4;
  EXPECT_EQ(generate(spec), gen_random_qp(5, 4, 3));
}

TEST(Generate, FamilyNames) {
  for (Family f : {Family::kMpc, Family::kLasso, Family::kHuber, Family::kRandom}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_FALSE(family_from_string("portfolio").has_value());
}

TEST(Generate, EveryFamilyPassesValidation) {
  for (const QpProblem& p :
       {gen_mpc(4, 3, 1), gen_lasso(2, 1), gen_huber(2, 1), gen_random_qp(8, 6, 1)}) {
    RawProblem raw{p.n, p.m, p.P, p.q, p.A, p.l, p.u};
    EXPECT_EQ(validate_problem(raw), p);
  }
}

}  // namespace
}  // namespace superadmm
