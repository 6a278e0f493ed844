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

#include "superadmm/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace superadmm {

SparseMatrix SparseMatrix::identity(Index n, double scale) {
  SparseMatrix eye(n, n);
  eye.rowidx.resize(n);
  eye.values.assign(n, scale);
  for (Index j = 0; j < n; ++j) {
    eye.colptr[j + 1] = j + 1;
    eye.rowidx[j] = j;
  }
  return eye;
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols,
                                         std::span<const Index> row_ids,
                                         std::span<const Index> col_ids,
                                         std::span<const double> vals) {
  if (row_ids.size() != col_ids.size() || row_ids.size() != vals.size()) {
    throw std::invalid_argument("triplet arrays differ in length");
  }
  std::vector<std::size_t> order(row_ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return col_ids[a] != col_ids[b] ? col_ids[a] < col_ids[b]
                                    : row_ids[a] < row_ids[b];
  });

  SparseMatrix out(rows, cols);
  out.rowidx.reserve(order.size());
  out.values.reserve(order.size());
  Index last_row = -1;
  Index last_col = -1;
  for (std::size_t k : order) {
    const Index i = row_ids[k];
    const Index j = col_ids[k];
    if (i < 0 || i >= rows || j < 0 || j >= cols) {
      throw std::out_of_range("triplet index out of range");
    }
    if (i == last_row && j == last_col) {
      out.values.back() += vals[k];
      continue;
    }
    out.rowidx.push_back(i);
    out.values.push_back(vals[k]);
    ++out.colptr[j + 1];
    last_row = i;
    last_col = j;
  }
  for (Index j = 0; j < cols; ++j) out.colptr[j + 1] += out.colptr[j];
  return out;
}

SparseMatrix SparseMatrix::from_dense(Index rows, Index cols,
                                      std::span<const double> row_major) {
  if (row_major.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("dense array has wrong size");
  }
  SparseMatrix out(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double v = row_major[static_cast<std::size_t>(i) * cols + j];
      if (v != 0.0) {
        out.rowidx.push_back(i);
        out.values.push_back(v);
      }
    }
    out.colptr[j + 1] = static_cast<Index>(out.rowidx.size());
  }
  return out;
}

bool SparseMatrix::is_canonical() const {
  if (nrows < 0 || ncols < 0) return false;
  if (colptr.size() != static_cast<std::size_t>(ncols) + 1) return false;
  if (colptr.front() != 0) return false;
  if (static_cast<std::size_t>(colptr.back()) != rowidx.size() ||
      rowidx.size() != values.size()) {
    return false;
  }
  for (Index j = 0; j < ncols; ++j) {
    if (colptr[j + 1] < colptr[j]) return false;
    for (Index p = colptr[j]; p < colptr[j + 1]; ++p) {
      if (rowidx[p] < 0 || rowidx[p] >= nrows) return false;
      if (p > colptr[j] && rowidx[p] <= rowidx[p - 1]) return false;
    }
  }
  return true;
}

SparseMatrix transpose(const SparseMatrix& a) {
  SparseMatrix t(a.ncols, a.nrows);
  t.rowidx.resize(a.nnz());
  t.values.resize(a.nnz());
  for (Index p = 0; p < a.nnz(); ++p) ++t.colptr[a.rowidx[p] + 1];
  for (Index i = 0; i < a.nrows; ++i) t.colptr[i + 1] += t.colptr[i];
  std::vector<Index> next(t.colptr.begin(), t.colptr.end() - 1);
  for (Index j = 0; j < a.ncols; ++j) {
    for (Index p = a.colptr[j]; p < a.colptr[j + 1]; ++p) {
      const Index dst = next[a.rowidx[p]]++;
      t.rowidx[dst] = j;
      t.values[dst] = a.values[p];
    }
  }
  return t;
}

SparseMatrix upper_triangle(const SparseMatrix& a) {
  SparseMatrix out(a.nrows, a.ncols);
  for (Index j = 0; j < a.ncols; ++j) {
    for (Index p = a.colptr[j]; p < a.colptr[j + 1]; ++p) {
      if (a.rowidx[p] <= j) {
        out.rowidx.push_back(a.rowidx[p]);
        out.values.push_back(a.values[p]);
      }
    }
    out.colptr[j + 1] = static_cast<Index>(out.rowidx.size());
  }
  return out;
}

std::vector<double> to_dense(const SparseMatrix& a) {
  std::vector<double> dense(static_cast<std::size_t>(a.nrows) * a.ncols, 0.0);
  for (Index j = 0; j < a.ncols; ++j) {
    for (Index p = a.colptr[j]; p < a.colptr[j + 1]; ++p) {
      dense[static_cast<std::size_t>(a.rowidx[p]) * a.ncols + j] += a.values[p];
    }
  }
  return dense;
}

void spmv_add(const SparseMatrix& a, std::span<const double> x,
              std::span<double> out) {
  assert(x.size() == static_cast<std::size_t>(a.ncols));
  assert(out.size() == static_cast<std::size_t>(a.nrows));
  for (Index j = 0; j < a.ncols; ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    for (Index p = a.colptr[j]; p < a.colptr[j + 1]; ++p) {
      out[a.rowidx[p]] += a.values[p] * xj;
    }
  }
}

void spmv_transpose_add(const SparseMatrix& a, std::span<const double> x,
                        std::span<double> out) {
  assert(x.size() == static_cast<std::size_t>(a.nrows));
  assert(out.size() == static_cast<std::size_t>(a.ncols));
  for (Index j = 0; j < a.ncols; ++j) {
    double acc = 0.0;
    for (Index p = a.colptr[j]; p < a.colptr[j + 1]; ++p) {
      acc += a.values[p] * x[a.rowidx[p]];
    }
    out[j] += acc;
  }
}

void symmetric_spmv_add(const SparseMatrix& upper, std::span<const double> x,
                        std::span<double> out) {
  assert(upper.nrows == upper.ncols);
  for (Index j = 0; j < upper.ncols; ++j) {
    double acc = 0.0;
    const double xj = x[j];
    for (Index p = upper.colptr[j]; p < upper.colptr[j + 1]; ++p) {
      const Index i = upper.rowidx[p];
      const double v = upper.values[p];
      if (i == j) {
        acc += v * xj;
      } else {
        out[i] += v * xj;
        acc += v * x[i];
      }
    }
    out[j] += acc;
  }
}

std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x) {
  std::vector<double> y(a.nrows, 0.0);
  spmv_add(a, x, y);
  return y;
}

std::vector<double> spmv_transpose(const SparseMatrix& a,
                                   std::span<const double> x) {
  std::vector<double> y(a.ncols, 0.0);
  spmv_transpose_add(a, x, y);
  return y;
}

std::vector<double> symmetric_spmv(const SparseMatrix& upper,
                                   std::span<const double> x) {
  std::vector<double> y(upper.nrows, 0.0);
  symmetric_spmv_add(upper, x, y);
  return y;
}

double infinity_norm(std::span<const double> v) {
  double norm = 0.0;
  for (double e : v) norm = std::max(norm, std::fabs(e));
  return norm;
}

}  // namespace superadmm
