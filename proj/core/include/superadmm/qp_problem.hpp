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

#ifndef SUPERADMM_QP_PROBLEM_HPP_
#define SUPERADMM_QP_PROBLEM_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "superadmm/sparse_matrix.hpp"

namespace superadmm {

// Bounds with magnitude at or above this are treated as infinite.
inline constexpr double kInfinityThreshold = 1e30;

enum class ValidationErrorKind {
  kDimensionMismatch,
  kBoundsError,
  kMalformedSparse,
  kNonFiniteData,
};

const char* to_string(ValidationErrorKind kind);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationErrorKind kind, const std::string& what);
  ValidationErrorKind kind() const { return kind_; }

 private:
  ValidationErrorKind kind_;
};

// Unchecked problem data as supplied by a caller or a file.
struct RawProblem {
  Index n = 0;
  Index m = 0;
  SparseMatrix P;
  std::vector<double> q;
  SparseMatrix A;
  std::vector<double> l;
  std::vector<double> u;
};

//   minimize    1/2 x'Px + q'x
//   subject to  l <= Ax <= u
//
// P holds only the upper triangle. Equality rows use l[i] == u[i].
// Construct through validate_problem().
struct QpProblem {
  Index n = 0;
  Index m = 0;
  SparseMatrix P;
  std::vector<double> q;
  SparseMatrix A;
  std::vector<double> l;
  std::vector<double> u;

  friend bool operator==(const QpProblem&, const QpProblem&) = default;
};

// Checks dimensions, CSC structure and finiteness. Non-canonical CSC columns
// are sorted and duplicate entries summed; lower-triangle entries of P are
// discarded. Bounds with |b| >= kInfinityThreshold become +-infinity.
// Throws ValidationError.
QpProblem validate_problem(RawProblem raw);

// Objective 1/2 x'Px + q'x with P expanded from its upper triangle.
double objective_value(const QpProblem& problem, std::span<const double> x);

}  // namespace superadmm

#endif  // SUPERADMM_QP_PROBLEM_HPP_
