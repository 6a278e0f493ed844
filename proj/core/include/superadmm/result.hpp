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

#ifndef SUPERADMM_RESULT_HPP_
#define SUPERADMM_RESULT_HPP_

#include <optional>
#include <string_view>
#include <vector>

namespace superadmm {

enum class Status {
  kSolved,
  kSolvedInaccurate,
  kPrimalInfeasible,
  kDualInfeasible,
  kMaxIterations,
  kTimeLimit,
  kNumericalError,
};

std::string_view to_string(Status status);
std::optional<Status> status_from_string(std::string_view name);

struct TraceRecord {
  int k = 0;
  double r_prim = 0.0;
  double r_dual = 0.0;
  double eps = 0.0;  // linear-solve residual of the iteration
  double b = 0.0;    // stability bound after the iteration
  double time_s = 0.0;
};

// On kPrimalInfeasible, y holds the certificate y^k - y^{k-1}; on
// kDualInfeasible, x holds x^k - x^{k-1}.
struct SolveResult {
  Status status = Status::kMaxIterations;
  std::vector<double> x;
  std::vector<double> y;
  int iterations = 0;
  double r_prim = 0.0;
  double r_dual = 0.0;
  double runtime = 0.0;  // seconds
  std::vector<TraceRecord> trace;
};

}  // namespace superadmm

#endif  // SUPERADMM_RESULT_HPP_
