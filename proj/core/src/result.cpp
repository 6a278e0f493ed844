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

#include "superadmm/result.hpp"

#include <array>
#include <utility>

namespace superadmm {
namespace {

constexpr std::array<std::pair<Status, std::string_view>, 7> kNames{{
    {Status::kSolved, "solved"},
    {Status::kSolvedInaccurate, "solved_inaccurate"},
    {Status::kPrimalInfeasible, "primal_infeasible"},
    {Status::kDualInfeasible, "dual_infeasible"},
    {Status::kMaxIterations, "max_iterations"},
    {Status::kTimeLimit, "time_limit"},
    {Status::kNumericalError, "numerical_error"},
}};

}  // namespace

std::string_view to_string(Status status) {
  for (const auto& [s, name] : kNames) {
    if (s == status) return name;
  }
  return "unknown";
}

std::optional<Status> status_from_string(std::string_view name) {
  for (const auto& [s, n] : kNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

}  // namespace superadmm
