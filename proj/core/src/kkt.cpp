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

#include <algorithm>
#include <cassert>
#include <cmath>

namespace superadmm {

KktMatrix assemble_kkt(const SparseMatrix& P_upper, const SparseMatrix& A,
                       double sigma, std::span<const double> rho) {
  const Index n = P_upper.ncols;
  const Index m = A.nrows;
  assert(A.ncols == n || m == 0);
  assert(rho.size() == static_cast<std::size_t>(m));

  KktMatrix kkt;
  kkt.n = n;
  kkt.m = m;
  kkt.penalty_diag.resize(m);
  SparseMatrix& K = kkt.upper;
  K = SparseMatrix(n + m, n + m);
  K.rowidx.reserve(P_upper.nnz() + n + A.nnz() + m);
  K.values.reserve(K.rowidx.capacity());

  for (Index j = 0; j < n; ++j) {
    bool has_diag = false;
    for (Index p = P_upper.colptr[j]; p < P_upper.colptr[j + 1]; ++p) {
      const Index i = P_upper.rowidx[p];
      if (i > j) break;
      K.rowidx.push_back(i);
      if (i == j) {
        K.values.push_back(P_upper.values[p] + sigma);
        has_diag = true;
      } else {
        K.values.push_back(P_upper.values[p]);
      }
    }
    if (!has_diag) {
      K.rowidx.push_back(j);
      K.values.push_back(sigma);
    }
    K.colptr[j + 1] = static_cast<Index>(K.rowidx.size());
  }

  const SparseMatrix At = transpose(A);
  for (Index i = 0; i < m; ++i) {
    for (Index p = At.colptr[i]; p < At.colptr[i + 1]; ++p) {
      K.rowidx.push_back(At.rowidx[p]);
      K.values.push_back(At.values[p]);
    }
    kkt.penalty_diag[i] = static_cast<Index>(K.rowidx.size());
    K.rowidx.push_back(n + i);
    K.values.push_back(-1.0 / rho[i]);
    K.colptr[n + i + 1] = static_cast<Index>(K.rowidx.size());
  }
  return kkt;
}

void update_kkt_penalties(KktMatrix& kkt, std::span<const double> rho) {
  assert(rho.size() == kkt.penalty_diag.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    kkt.upper.values[kkt.penalty_diag[i]] = -1.0 / rho[i];
  }
}

double kkt_residual_inf_norm(const KktMatrix& kkt,
                             std::span<const double> solution,
                             std::span<const double> rhs) {
  std::vector<double> r(rhs.size(), 0.0);
  symmetric_spmv_add(kkt.upper, solution, r);
  double norm = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    norm = std::max(norm, std::fabs(rhs[i] - r[i]));
  }
  return norm;
}

}  // namespace superadmm
