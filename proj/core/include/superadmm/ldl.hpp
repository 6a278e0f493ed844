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

#ifndef SUPERADMM_LDL_HPP_
#define SUPERADMM_LDL_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "superadmm/kkt.hpp"
#include "superadmm/settings.hpp"
#include "superadmm/sparse_matrix.hpp"

namespace superadmm {

class FactorizationError : public std::runtime_error {
 public:
  explicit FactorizationError(const std::string& what)
      : std::runtime_error(what) {}
};

inline constexpr Index kNoParent = -1;

// Everything that depends only on the sparsity pattern and the ordering.
struct SymbolicFactorization {
  std::vector<Index> perm;  // new-to-old
  std::vector<Index> pinv;  // old-to-new
  std::vector<Index> etree;  // parent of each permuted column, kNoParent at roots
  std::vector<Index> col_counts;  // strictly-lower nonzeros per column of L
  Index nnz_l = 0;
};

// Elimination tree and exact column counts of L for P K P^T, where `upper`
// is the upper triangle of K in the original ordering.
SymbolicFactorization symbolic_factorize(const SparseMatrix& upper,
                                         std::vector<Index> perm);

// P K P^T = L D L^T with L unit lower triangular (diagonal not stored).
struct LdlFactors {
  SparseMatrix L;
  std::vector<double> d;
  std::vector<Index> perm;
  std::vector<Index> pinv;

  Index positive_pivots() const;
  Index negative_pivots() const;
};

// Pivot-free factorization of the quasidefinite KKT matrix. Throws
// FactorizationError on a zero pivot or a pivot whose sign disagrees with
// its block (positive for the leading n, negative for the trailing m).
LdlFactors numeric_factorize(const KktMatrix& kkt,
                             const SymbolicFactorization& sym);

// Same as above for an arbitrary symmetric matrix; only zero pivots fail.
LdlFactors numeric_factorize(const SparseMatrix& upper,
                             const SymbolicFactorization& sym);

std::vector<double> ldl_solve(const LdlFactors& factors,
                              std::span<const double> rhs);

// Reusable factorization of a KktMatrix whose pattern never changes. All
// storage is allocated in the constructor.
class KktSolver {
 public:
  KktSolver(const KktMatrix& kkt, Ordering ordering);

  // Refreshes the permuted values from `kkt` and refactors.
  void factorize(const KktMatrix& kkt);

  // Solves K s = rhs into `solution`. Returns ||rhs - K s||_inf of the direct
  // solve. When that residual exceeds 1e-10 ||rhs||_inf, one step of
  // iterative refinement is applied to `solution` afterwards.
  double solve(const KktMatrix& kkt, std::span<const double> rhs,
               std::span<double> solution);

  const SymbolicFactorization& symbolic() const { return sym_; }
  const LdlFactors& factors() const { return factors_; }

 private:
  void solve_in_place(std::span<double> x);

  SymbolicFactorization sym_;
  std::vector<Index> value_map_;  // kkt.upper entry -> permuted_ entry
  SparseMatrix permuted_;
  std::vector<int> expected_sign_;
  LdlFactors factors_;
  // Numeric factorization workspace.
  std::vector<double> y_;
  std::vector<Index> pattern_;
  std::vector<Index> flag_;
  std::vector<Index> fill_;
  // Solve workspace.
  std::vector<double> work_;
  std::vector<double> residual_;
};

}  // namespace superadmm

#endif  // SUPERADMM_LDL_HPP_
