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

#include "superadmm/qp_problem.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace superadmm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(ValidationErrorKind kind, const std::string& what) {
  throw ValidationError(kind, what);
}

void check_csc_arrays(const SparseMatrix& mat, const char* name) {
  const std::string prefix = std::string(name) + ": ";
  if (mat.colptr.size() != static_cast<std::size_t>(mat.ncols) + 1) {
    fail(ValidationErrorKind::kMalformedSparse,
         prefix + "colptr must have ncols + 1 entries");
  }
  if (mat.colptr.front() != 0) {
    fail(ValidationErrorKind::kMalformedSparse, prefix + "colptr[0] must be 0");
  }
  for (Index j = 0; j < mat.ncols; ++j) {
    if (mat.colptr[j + 1] < mat.colptr[j]) {
      fail(ValidationErrorKind::kMalformedSparse,
           prefix + "colptr is not monotone at column " + std::to_string(j));
    }
  }
  if (static_cast<std::size_t>(mat.colptr.back()) != mat.rowidx.size() ||
      mat.rowidx.size() != mat.values.size()) {
    fail(ValidationErrorKind::kMalformedSparse,
         prefix + "colptr, rowidx and values lengths are inconsistent");
  }
  for (Index r : mat.rowidx) {
    if (r < 0 || r >= mat.nrows) {
      fail(ValidationErrorKind::kMalformedSparse,
           prefix + "row index " + std::to_string(r) + " out of range");
    }
  }
  for (double v : mat.values) {
    if (!std::isfinite(v)) {
      fail(ValidationErrorKind::kNonFiniteData,
           prefix + "matrix values must be finite");
    }
  }
}

// Sorts rows inside each column and sums duplicates. Canonical input is
// returned unchanged.
SparseMatrix canonicalize(SparseMatrix mat) {
  if (mat.is_canonical()) return mat;
  std::vector<Index> cols(mat.rowidx.size());
  for (Index j = 0; j < mat.ncols; ++j) {
    for (Index p = mat.colptr[j]; p < mat.colptr[j + 1]; ++p) cols[p] = j;
  }
  return SparseMatrix::from_triplets(mat.nrows, mat.ncols, mat.rowidx, cols,
                                     mat.values);
}

bool has_lower_entries(const SparseMatrix& mat) {
  for (Index j = 0; j < mat.ncols; ++j) {
    for (Index p = mat.colptr[j]; p < mat.colptr[j + 1]; ++p) {
      if (mat.rowidx[p] > j) return true;
    }
  }
  return false;
}

double normalize_bound(double b) {
  if (b >= kInfinityThreshold) return kInf;
  if (b <= -kInfinityThreshold) return -kInf;
  return b;
}

}  // namespace

const char* to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::kDimensionMismatch:
      return "DimensionMismatch";
    case ValidationErrorKind::kBoundsError:
      return "BoundsError";
    case ValidationErrorKind::kMalformedSparse:
      return "MalformedSparse";
    case ValidationErrorKind::kNonFiniteData:
      return "NonFiniteData";
  }
  return "Unknown";
}

ValidationError::ValidationError(ValidationErrorKind kind,
                                 const std::string& what)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

QpProblem validate_problem(RawProblem raw) {
  if (raw.n < 0 || raw.m < 0) {
    fail(ValidationErrorKind::kDimensionMismatch, "negative dimension");
  }
  if (raw.P.nrows != raw.n || raw.P.ncols != raw.n) {
    fail(ValidationErrorKind::kDimensionMismatch, "P must be n x n");
  }
  if (raw.A.nrows != raw.m || raw.A.ncols != raw.n) {
    fail(ValidationErrorKind::kDimensionMismatch, "A must be m x n");
  }
  if (raw.q.size() != static_cast<std::size_t>(raw.n)) {
    fail(ValidationErrorKind::kDimensionMismatch, "q must have length n");
  }
  if (raw.l.size() != static_cast<std::size_t>(raw.m) ||
      raw.u.size() != static_cast<std::size_t>(raw.m)) {
    fail(ValidationErrorKind::kDimensionMismatch, "l and u must have length m");
  }

  check_csc_arrays(raw.P, "P");
  check_csc_arrays(raw.A, "A");

  for (double v : raw.q) {
    if (!std::isfinite(v)) {
      fail(ValidationErrorKind::kNonFiniteData, "q must be finite");
    }
  }
  for (Index i = 0; i < raw.m; ++i) {
    if (std::isnan(raw.l[i]) || std::isnan(raw.u[i])) {
      fail(ValidationErrorKind::kNonFiniteData,
           "NaN bound in row " + std::to_string(i));
    }
    raw.l[i] = normalize_bound(raw.l[i]);
    raw.u[i] = normalize_bound(raw.u[i]);
    if (raw.l[i] > raw.u[i]) {
      fail(ValidationErrorKind::kBoundsError,
           "l > u in row " + std::to_string(i));
    }
    if (raw.l[i] == kInf || raw.u[i] == -kInf) {
      fail(ValidationErrorKind::kBoundsError,
           "row " + std::to_string(i) + " has an empty feasible interval");
    }
  }

  QpProblem out;
  out.n = raw.n;
  out.m = raw.m;
  out.P = canonicalize(std::move(raw.P));
  if (has_lower_entries(out.P)) out.P = upper_triangle(out.P);
  out.A = canonicalize(std::move(raw.A));
  out.q = std::move(raw.q);
  out.l = std::move(raw.l);
  out.u = std::move(raw.u);
  return out;
}

double objective_value(const QpProblem& problem, std::span<const double> x) {
  const std::vector<double> px = symmetric_spmv(problem.P, x);
  double f = 0.0;
  for (Index j = 0; j < problem.n; ++j) {
    f += 0.5 * x[j] * px[j] + problem.q[j] * x[j];
  }
  return f;
}

}  // namespace superadmm
