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

#ifndef SUPERADMM_IO_HPP_
#define SUPERADMM_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "superadmm/qp_problem.hpp"
#include "superadmm/result.hpp"
#include "superadmm/solver.hpp"

namespace superadmm {

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Problem files are JSON documents with keys n, m, P, q, A, l, u. P and A are
// objects {colptr, rowidx, values}; P holds the upper triangle. Bound entries
// are numbers or the strings "inf" / "-inf". Doubles are written in shortest
// round-trip form, so save followed by load is exact.
std::string problem_to_string(const QpProblem& problem);
QpProblem problem_from_string(const std::string& text);
void save_problem(const QpProblem& problem, const std::filesystem::path& path);
QpProblem load_problem(const std::filesystem::path& path);

// Solution files: {status, iterations, r_prim, r_dual, runtime, x, y}. The
// same document is accepted as a warm start.
std::string solution_to_string(const SolveResult& result);
void save_solution(const SolveResult& result,
                   const std::filesystem::path& path);
WarmStart load_warm_start(const std::filesystem::path& path);

// CSV with header k,r_prim,r_dual,eps,b,time_s.
void write_trace(std::ostream& out, const std::vector<TraceRecord>& trace);
void save_trace(const std::vector<TraceRecord>& trace,
                const std::filesystem::path& path);

}  // namespace superadmm

#endif  // SUPERADMM_IO_HPP_
