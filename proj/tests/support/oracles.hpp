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


// Dense reference computations used to check the sparse solver and its
// building blocks. Nothing here shares code with superadmm_core beyond the
// plain data types.

#ifndef SUPERADMM_TESTS_SUPPORT_ORACLES_HPP_
#define SUPERADMM_TESTS_SUPPORT_ORACLES_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "superadmm/qp_problem.hpp"
#include "superadmm/sparse_matrix.hpp"

namespace superadmm::testing {

Eigen::MatrixXd to_eigen(const SparseMatrix& a);

// Full symmetric matrix from its stored upper triangle.
Eigen::MatrixXd symmetric_from_upper(const SparseMatrix& upper);

struct OracleSolution {
  Eigen::VectorXd x;
  Eigen::VectorXd y;
  double objective = 0.0;
};

// Exhaustive active-set search for a strictly convex QP with finite bounds.
// Active sets are visited by increasing cardinality; each one yields the
// minimizer of the equality-constrained problem. Among primal-feasible
// candidates the one with the smallest objective wins, and the search stops
// early once a candidate also has multipliers of the right sign (a KKT point,
// hence the unique optimum).
std::optional<OracleSolution> active_set_solve(const QpProblem& problem);

// Off-diagonal nonzeros of L for the symmetric pattern of `upper` eliminated
// in the order `perm` (new-to-old), computed by playing the elimination game
// on a dense boolean graph.
int elimination_fill(const SparseMatrix& upper, const std::vector<Index>& perm);

// Minimizer of sum_i huber(a_i x - b_i) with threshold m (huber(e) = e^2 for
// |e| <= m, 2m|e| - m^2 otherwise) over scalar x, by bisection on the
// monotone derivative.
double huber_minimizer_1d(std::span<const double> a, std::span<const double> b,
                          double m);
double huber_loss_1d(std::span<const double> a, std::span<const double> b,
                     double m, double x);

// r_prim = |Ax - proj(Ax)|_inf and r_dual = |Px + q + A'y|_inf, recomputed
// densely from a returned (x, y).
std::pair<double, double> recomputed_residuals(const QpProblem& problem,
                                               std::span<const double> x,
                                               std::span<const double> y);

}  // namespace superadmm::testing

#endif  // SUPERADMM_TESTS_SUPPORT_ORACLES_HPP_
