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


#include "superadmm/ldl.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "corpora.hpp"
#include "oracles.hpp"
#include "superadmm/ordering.hpp"
#include "superadmm/rng.hpp"

namespace superadmm {
namespace {

using ::std::vector;

SparseMatrix upper_of(int n, const vector<double>& dense) {
  return upper_triangle(SparseMatrix::from_dense(n, n, dense));
}

// L D L' in the original ordering.
Eigen::MatrixXd reconstruct(const LdlFactors& f) {
  const Index n = static_cast<Index>(f.d.size());
  Eigen::MatrixXd L = testing::to_eigen(f.L) + Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd permuted =
      L * Eigen::VectorXd::Map(f.d.data(), n).asDiagonal() * L.transpose();
  Eigen::MatrixXd out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out(f.perm[i], f.perm[j]) = permuted(i, j);
  }
  return out;
}

TEST(SymbolicFactorize, DenseTwoByTwo) {
  const SymbolicFactorization s =
      symbolic_factorize(upper_of(2, {1, 1, 1, 1}), natural_order(2));
  EXPECT_EQ(s.etree, (vector<Index>{1, kNoParent}));
  EXPECT_EQ(s.nnz_l, 1);
}

TEST(SymbolicFactorize, DiagonalHasOnlyRoots) {
  const SymbolicFactorization s =
      symbolic_factorize(SparseMatrix::identity(4), natural_order(4));
  EXPECT_EQ(s.etree, vector<Index>(4, kNoParent));
  EXPECT_EQ(s.nnz_l, 0);
}

TEST(SymbolicFactorize, TridiagonalChain) {
  const SymbolicFactorization s = symbolic_factorize(
      upper_of(4, {2, 1, 0, 0, 1, 2, 1, 0, 0, 1, 2, 1, 0, 0, 1, 2}), natural_order(4));
  EXPECT_EQ(s.etree, (vector<Index>{1, 2, 3, kNoParent}));
  EXPECT_EQ(s.col_counts, (vector<Index>{1, 1, 1, 0}));
  EXPECT_EQ(s.nnz_l, 3);
}

TEST(SymbolicFactorize, CountsMatchEliminationGame) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SparseMatrix& k = testing::random_kkt(seed).kkt.upper;
    vector<Index> perm(k.ncols);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed, 77);
    for (Index i = k.ncols - 1; i > 0; --i) {
      std::swap(perm[i], perm[static_cast<Index>(rng.uniform() * (i + 1))]);
    }
    const SymbolicFactorization s = symbolic_factorize(k, perm);
    EXPECT_EQ(s.nnz_l, testing::elimination_fill(k, perm)) << "seed " << seed;
    EXPECT_EQ(std::accumulate(s.col_counts.begin(), s.col_counts.end(), 0), s.nnz_l);
  }
}

TEST(NumericFactorize, HandComputedTwoByTwo) {
  const SparseMatrix k = upper_of(2, {3, 1, 1, -1});
  const LdlFactors f = numeric_factorize(k, symbolic_factorize(k, natural_order(2)));
  ASSERT_EQ(f.L.nnz(), 1);
  EXPECT_EQ(f.L.rowidx[0], 1);
  EXPECT_NEAR(f.L.values[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(f.d[0], 3.0, 1e-15);
  EXPECT_NEAR(f.d[1], -4.0 / 3.0, 1e-15);
  EXPECT_EQ(f.positive_pivots(), 1);
  EXPECT_EQ(f.negative_pivots(), 1);
  EXPECT_LE((reconstruct(f) - testing::symmetric_from_upper(k)).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(NumericFactorize, DiagonalIsItsOwnFactor) {
  const SparseMatrix k = upper_of(3, {2, 0, 0, 0, -5, 0, 0, 0, 0.25});
  const LdlFactors f = numeric_factorize(k, symbolic_factorize(k, natural_order(3)));
  EXPECT_EQ(f.L.nnz(), 0);
  EXPECT_EQ(f.d, (vector<double>{2, -5, 0.25}));
}

TEST(NumericFactorize, ZeroPivotFails) {
  SparseMatrix k(2, 2);
  k.colptr = {0, 1, 2};
  k.rowidx = {0, 1};
  k.values = {1.0, 0.0};
  EXPECT_THROW(numeric_factorize(k, symbolic_factorize(k, natural_order(2))),
               FactorizationError);
}

TEST(NumericFactorize, WrongInertiaInKktFails) {
  const KktMatrix kkt = assemble_kkt(SparseMatrix::identity(1, -2.0),
                                     SparseMatrix::identity(1), 1e-6,
                                     vector<double>{1.0});
  EXPECT_THROW(numeric_factorize(kkt, symbolic_factorize(kkt.upper, natural_order(2))),
               FactorizationError);
}

TEST(LdlSolve, HandComputedTwoByTwo) {
  const SparseMatrix k = upper_of(2, {3, 1, 1, -1});
  const LdlFactors f = numeric_factorize(k, symbolic_factorize(k, natural_order(2)));
  const vector<double> s = ldl_solve(f, vector<double>{1.0, 0.0});
  EXPECT_NEAR(s[0], 0.25, 1e-15);
  EXPECT_NEAR(s[1], 0.25, 1e-15);
}

TEST(LdlSolve, IdentityAndZeroRhs) {
  const SparseMatrix k = SparseMatrix::identity(3);
  const LdlFactors f = numeric_factorize(k, symbolic_factorize(k, natural_order(3)));
  const vector<double> rhs{1.5, -2.0, 0.0};
  EXPECT_EQ(ldl_solve(f, rhs), rhs);

  const SparseMatrix k2 = upper_of(2, {3, 1, 1, -1});
  const LdlFactors f2 =
      numeric_factorize(k2, symbolic_factorize(k2, natural_order(2)));
  EXPECT_EQ(ldl_solve(f2, vector<double>{0, 0}), (vector<double>{0, 0}));
}

TEST(NumericFactorize, RandomKktReconstructsWithExactInertia) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const testing::RandomKkt r = testing::random_kkt(seed);
    const SymbolicFactorization s =
        symbolic_factorize(r.kkt.upper, mindeg_order(r.kkt.upper));
    const LdlFactors f = numeric_factorize(r.kkt, s);
    const Eigen::MatrixXd k = testing::symmetric_from_upper(r.kkt.upper);
    EXPECT_LE((reconstruct(f) - k).cwiseAbs().maxCoeff(),
              1e-10 * k.cwiseAbs().rowwise().sum().maxCoeff())
        << "seed " << seed;
    EXPECT_EQ(f.positive_pivots(), r.kkt.n);
    EXPECT_EQ(f.negative_pivots(), r.kkt.m);
    EXPECT_EQ(f.L.nnz(), s.nnz_l);
  }
}

TEST(KktSolver, SolvesAndRefactorsAfterPenaltyChange) {
  testing::RandomKkt r = testing::random_kkt(4);
  KktSolver solver(r.kkt, Ordering::kMinimumDegree);
  solver.factorize(r.kkt);
  const Index dim = r.kkt.dim();
  Rng rng(4, 5);
  vector<double> rhs(dim);
  for (auto& v : rhs) v = rng.normal();
  vector<double> sol(dim);
  solver.solve(r.kkt, rhs, sol);
  EXPECT_LE(kkt_residual_inf_norm(r.kkt, sol, rhs), 1e-8 * infinity_norm(rhs));

  for (auto& rho : r.rho) rho *= 500.0;
  update_kkt_penalties(r.kkt, r.rho);
  solver.factorize(r.kkt);
  solver.solve(r.kkt, rhs, sol);
  EXPECT_LE(kkt_residual_inf_norm(r.kkt, sol, rhs), 1e-8 * infinity_norm(rhs));
}

TEST(KktSolver, ScalarSystemSolvesExactly) {
  const KktMatrix kkt = assemble_kkt(SparseMatrix::identity(1, 2.0),
                                     SparseMatrix::identity(1), 1.0,
                                     vector<double>{1.0});
  KktSolver solver(kkt, Ordering::kNatural);
  solver.factorize(kkt);
  vector<double> sol(2);
  const double eps = solver.solve(kkt, vector<double>{1.0, 0.0}, sol);
  EXPECT_LE(eps, 1e-15);
  EXPECT_NEAR(sol[0], 0.25, 1e-15);
  EXPECT_NEAR(sol[1], 0.25, 1e-15);
}

TEST(KktSolver, ReportsResidualBeforeRefinement) {
  int refined = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const KktMatrix& kkt = testing::random_kkt(seed).kkt;
    KktSolver solver(kkt, Ordering::kMinimumDegree);
    solver.factorize(kkt);
    Rng rng(seed, 9);
    vector<double> rhs(kkt.dim());
    for (double& v : rhs) v = rng.normal(0.0, 1e6);
    vector<double> sol(kkt.dim());
    const double eps = solver.solve(kkt, rhs, sol);
    const vector<double> direct = ldl_solve(solver.factors(), rhs);
    EXPECT_EQ(eps, kkt_residual_inf_norm(kkt, direct, rhs)) << "seed " << seed;
    if (eps > 1e-10 * infinity_norm(rhs)) {
      ++refined;
      EXPECT_LE(kkt_residual_inf_norm(kkt, sol, rhs), eps) << "seed " << seed;
    }
  }
  EXPECT_GT(refined, 0);
}

}  // namespace
}  // namespace superadmm
