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

#ifndef SUPERADMM_SPARSE_MATRIX_HPP_
#define SUPERADMM_SPARSE_MATRIX_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace superadmm {

using Index = std::int32_t;

// Compressed sparse column matrix. Canonical form: colptr[0] == 0,
// colptr non-decreasing, colptr[ncols] == nnz, and row indices strictly
// increasing inside each column.
struct SparseMatrix {
  Index nrows = 0;
  Index ncols = 0;
  std::vector<Index> colptr{0};
  std::vector<Index> rowidx;
  std::vector<double> values;

  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols)
      : nrows(rows), ncols(cols), colptr(static_cast<std::size_t>(cols) + 1, 0) {}

  Index nnz() const { return colptr.empty() ? 0 : colptr.back(); }

  static SparseMatrix identity(Index n, double scale = 1.0);
  // Builds a canonical matrix from (row, col, value) triplets; duplicates are
  // summed.
  static SparseMatrix from_triplets(Index rows, Index cols,
                                    std::span<const Index> row_ids,
                                    std::span<const Index> col_ids,
                                    std::span<const double> vals);
  // Dense row-major input; exact zeros are dropped.
  static SparseMatrix from_dense(Index rows, Index cols,
                                 std::span<const double> row_major);

  // Returns true when the arrays satisfy every CSC invariant.
  bool is_canonical() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

SparseMatrix transpose(const SparseMatrix& a);

// Upper triangle (row <= col) of a square matrix.
SparseMatrix upper_triangle(const SparseMatrix& a);

// Row-major dense copy. Intended for tests and small problems.
std::vector<double> to_dense(const SparseMatrix& a);

// y = A x
std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x);
// y = A^T x
std::vector<double> spmv_transpose(const SparseMatrix& a,
                                   std::span<const double> x);
// y = S x where S is symmetric and only its upper triangle is stored in
// `upper`.
std::vector<double> symmetric_spmv(const SparseMatrix& upper,
                                   std::span<const double> x);

// Accumulating variants writing into caller-owned storage: out += A x etc.
void spmv_add(const SparseMatrix& a, std::span<const double> x,
              std::span<double> out);
void spmv_transpose_add(const SparseMatrix& a, std::span<const double> x,
                        std::span<double> out);
void symmetric_spmv_add(const SparseMatrix& upper, std::span<const double> x,
                        std::span<double> out);

double infinity_norm(std::span<const double> v);

}  // namespace superadmm

#endif  // SUPERADMM_SPARSE_MATRIX_HPP_
