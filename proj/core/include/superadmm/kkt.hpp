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

#ifndef SUPERADMM_KKT_HPP_
#define SUPERADMM_KKT_HPP_

#include <span>
#include <vector>

#include "superadmm/sparse_matrix.hpp"

namespace superadmm {

// Upper triangle of the quasidefinite system
//
//   [ P + sigma I      A^T   ]
//   [      A        -R^{-1}  ]
//
// The pattern is fixed at assembly; only the trailing diagonal changes.
struct KktMatrix {
  Index n = 0;
  Index m = 0;
  SparseMatrix upper;
  // Position in upper.values of the (n + i, n + i) diagonal entry.
  std::vector<Index> penalty_diag;

  Index dim() const { return n + m; }
};

KktMatrix assemble_kkt(const SparseMatrix& P_upper, const SparseMatrix& A,
                       double sigma, std::span<const double> rho);

// Rewrites the trailing diagonal as -1/rho_i.
void update_kkt_penalties(KktMatrix& kkt, std::span<const double> rho);

// ||rhs - K solution||_inf using the full symmetric K.
double kkt_residual_inf_norm(const KktMatrix& kkt,
                             std::span<const double> solution,
                             std::span<const double> rhs);

}  // namespace superadmm

#endif  // SUPERADMM_KKT_HPP_
