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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <utility>

#include "superadmm/ordering.hpp"

namespace superadmm {
namespace {

// Elimination tree and strictly-lower column counts of L for a permuted
// upper triangle.
void etree_and_counts(const SparseMatrix& C, std::vector<Index>& parent,
                      std::vector<Index>& lnz) {
  const Index n = C.ncols;
  parent.assign(n, kNoParent);
  lnz.assign(n, 0);
  std::vector<Index> flag(n, -1);
  for (Index k = 0; k < n; ++k) {
    flag[k] = k;
    for (Index p = C.colptr[k]; p < C.colptr[k + 1]; ++p) {
      Index i = C.rowidx[p];
      if (i >= k) continue;
      for (; flag[i] != k; i = parent[i]) {
        if (parent[i] == kNoParent) parent[i] = k;
        ++lnz[i];
        flag[i] = k;
      }
    }
  }
}

struct NumericWorkspace {
  std::vector<double>& y;
  std::vector<Index>& pattern;
  std::vector<Index>& flag;
  std::vector<Index>& fill;
};

// Up-looking LDL' of the permuted upper triangle C into `factors`, whose L
// pattern storage is already sized from `sym`. `expected_sign` may be empty.
void factor_permuted(const SparseMatrix& C, const SymbolicFactorization& sym,
                     std::span<const int> expected_sign, NumericWorkspace ws,
                     LdlFactors& factors) {
  const Index n = C.ncols;
  const auto& parent = sym.etree;
  SparseMatrix& L = factors.L;
  std::vector<double>& d = factors.d;

  for (Index k = 0; k < n; ++k) {
    ws.y[k] = 0.0;
    Index top = n;
    ws.flag[k] = k;
    ws.fill[k] = 0;
    for (Index p = C.colptr[k]; p < C.colptr[k + 1]; ++p) {
      Index i = C.rowidx[p];
      if (i > k) continue;
      ws.y[i] += C.values[p];
      Index len = 0;
      for (; ws.flag[i] != k; i = parent[i]) {
        ws.pattern[len++] = i;
        ws.flag[i] = k;
      }
      while (len > 0) ws.pattern[--top] = ws.pattern[--len];
    }
    d[k] = ws.y[k];
    ws.y[k] = 0.0;
    for (; top < n; ++top) {
      const Index i = ws.pattern[top];
      const double yi = ws.y[i];
      ws.y[i] = 0.0;
      const Index end = L.colptr[i] + ws.fill[i];
      for (Index p = L.colptr[i]; p < end; ++p) {
        ws.y[L.rowidx[p]] -= L.values[p] * yi;
      }
      const double l_ki = yi / d[i];
      d[k] -= l_ki * yi;
      L.rowidx[end] = k;
      L.values[end] = l_ki;
      ++ws.fill[i];
    }
    if (d[k] == 0.0 || !std::isfinite(d[k])) {
      throw FactorizationError("zero or non-finite pivot at column " +
                               std::to_string(k));
    }
    if (!expected_sign.empty() && (d[k] > 0.0) != (expected_sign[k] > 0)) {
      throw FactorizationError("pivot of wrong sign at column " +
                               std::to_string(k));
    }
  }
}

LdlFactors allocate_factors(const SymbolicFactorization& sym) {
  const Index n = static_cast<Index>(sym.perm.size());
  LdlFactors f;
  f.L = SparseMatrix(n, n);
  for (Index j = 0; j < n; ++j) {
    f.L.colptr[j + 1] = f.L.colptr[j] + sym.col_counts[j];
  }
  f.L.rowidx.assign(sym.nnz_l, 0);
  f.L.values.assign(sym.nnz_l, 0.0);
  f.d.assign(n, 0.0);
  f.perm = sym.perm;
  f.pinv = sym.pinv;
  return f;
}

void solve_permuted(const LdlFactors& f, std::span<double> x) {
  const SparseMatrix& L = f.L;
  const Index n = L.ncols;
  for (Index j = 0; j < n; ++j) {
    const double xj = x[j];
    for (Index p = L.colptr[j]; p < L.colptr[j + 1]; ++p) {
      x[L.rowidx[p]] -= L.values[p] * xj;
    }
  }
  for (Index j = 0; j < n; ++j) x[j] /= f.d[j];
  for (Index j = n - 1; j >= 0; --j) {
    double xj = x[j];
    for (Index p = L.colptr[j]; p < L.colptr[j + 1]; ++p) {
      xj -= L.values[p] * x[L.rowidx[p]];
    }
    x[j] = xj;
  }
}

LdlFactors factorize_upper(const SparseMatrix& upper,
                           const SymbolicFactorization& sym,
                           std::span<const int> expected_sign) {
  const SparseMatrix C = symmetric_permute(upper, sym.pinv);
  const Index n = C.ncols;
  LdlFactors f = allocate_factors(sym);
  std::vector<double> y(n, 0.0);
  std::vector<Index> pattern(n), flag(n), fill(n);
  factor_permuted(C, sym, expected_sign, {y, pattern, flag, fill}, f);
  return f;
}

std::vector<int> kkt_signs(const KktMatrix& kkt, const std::vector<Index>& perm) {
  std::vector<int> sign(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    sign[k] = perm[k] < kkt.n ? 1 : -1;
  }
  return sign;
}

}  // namespace

SymbolicFactorization symbolic_factorize(const SparseMatrix& upper,
                                         std::vector<Index> perm) {
  assert(perm.size() == static_cast<std::size_t>(upper.ncols));
  SymbolicFactorization sym;
  sym.pinv = inverse_permutation(perm);
  sym.perm = std::move(perm);
  const SparseMatrix C = symmetric_permute(upper, sym.pinv);
  etree_and_counts(C, sym.etree, sym.col_counts);
  sym.nnz_l = 0;
  for (Index c : sym.col_counts) sym.nnz_l += c;
  return sym;
}

Index LdlFactors::positive_pivots() const {
  return static_cast<Index>(
      std::count_if(d.begin(), d.end(), [](double v) { return v > 0.0; }));
}

Index LdlFactors::negative_pivots() const {
  return static_cast<Index>(
      std::count_if(d.begin(), d.end(), [](double v) { return v < 0.0; }));
}

LdlFactors numeric_factorize(const KktMatrix& kkt,
                             const SymbolicFactorization& sym) {
  const std::vector<int> sign = kkt_signs(kkt, sym.perm);
  return factorize_upper(kkt.upper, sym, sign);
}

LdlFactors numeric_factorize(const SparseMatrix& upper,
                             const SymbolicFactorization& sym) {
  return factorize_upper(upper, sym, {});
}

std::vector<double> ldl_solve(const LdlFactors& factors,
                              std::span<const double> rhs) {
  const std::size_t n = factors.d.size();
  assert(rhs.size() == n);
  std::vector<double> work(n);
  for (std::size_t k = 0; k < n; ++k) work[k] = rhs[factors.perm[k]];
  solve_permuted(factors, work);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[factors.perm[k]] = work[k];
  return out;
}

KktSolver::KktSolver(const KktMatrix& kkt, Ordering ordering)
    : sym_(symbolic_factorize(kkt.upper, compute_ordering(kkt.upper, ordering))),
      permuted_(symmetric_permute(kkt.upper, sym_.pinv, &value_map_)),
      expected_sign_(kkt_signs(kkt, sym_.perm)),
      factors_(allocate_factors(sym_)),
      y_(kkt.dim(), 0.0),
      pattern_(kkt.dim()),
      flag_(kkt.dim()),
      fill_(kkt.dim()),
      work_(kkt.dim()),
      residual_(kkt.dim()) {}

void KktSolver::factorize(const KktMatrix& kkt) {
  for (std::size_t p = 0; p < value_map_.size(); ++p) {
    permuted_.values[value_map_[p]] = kkt.upper.values[p];
  }
  factor_permuted(permuted_, sym_, expected_sign_, {y_, pattern_, flag_, fill_},
                  factors_);
}

void KktSolver::solve_in_place(std::span<double> x) {
  const std::size_t n = x.size();
  for (std::size_t k = 0; k < n; ++k) work_[k] = x[sym_.perm[k]];
  solve_permuted(factors_, work_);
  for (std::size_t k = 0; k < n; ++k) x[sym_.perm[k]] = work_[k];
}

double KktSolver::solve(const KktMatrix& kkt, std::span<const double> rhs,
                        std::span<double> solution) {
  std::copy(rhs.begin(), rhs.end(), solution.begin());
  solve_in_place(solution);

  std::fill(residual_.begin(), residual_.end(), 0.0);
  symmetric_spmv_add(kkt.upper, solution, residual_);
  double eps = 0.0;
  for (std::size_t i = 0; i < residual_.size(); ++i) {
    residual_[i] = rhs[i] - residual_[i];
    eps = std::max(eps, std::fabs(residual_[i]));
  }
  if (eps > 1e-10 * infinity_norm(rhs)) {
    solve_in_place(residual_);
    for (std::size_t i = 0; i < residual_.size(); ++i) {
      solution[i] += residual_[i];
    }
  }
  return eps;
}

}  // namespace superadmm
