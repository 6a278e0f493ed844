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

#ifndef SUPERADMM_GENERATORS_HPP_
#define SUPERADMM_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superadmm/qp_problem.hpp"

namespace superadmm {

class GeneratorError : public std::runtime_error {
 public:
  explicit GeneratorError(const std::string& what)
      : std::runtime_error(what) {}
};

enum class Family { kMpc, kLasso, kHuber, kRandom };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kRandom;
  int nx = 0;       // mpc
  int horizon = 0;  // mpc
  int n = 0;        // lasso, huber, random
  int m = 0;        // random
  std::uint64_t seed = 0;
};

// Row-major dense matrix, used for the small dense blocks of the MPC
// generator.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0.0) {}
  double& operator()(int i, int j) { return data[std::size_t(i) * cols + j]; }
  double operator()(int i, int j) const {
    return data[std::size_t(i) * cols + j];
  }
};

// Solves the discrete algebraic Riccati equation by fixed-point iteration of
//   P <- A'PA - A'PB (R + B'PB)^{-1} B'PA + Q
// from P = Q until ||P_{j+1} - P_j||_inf <= 1e-10 ||P_j||_inf. The result is
// symmetrized. Throws GeneratorError after 1e5 iterations.
DenseMatrix solve_dare(const DenseMatrix& A, const DenseMatrix& B,
                       const DenseMatrix& Q, const DenseMatrix& R);

// Linear MPC over horizon N with n_u = nx / 2 inputs. Decision vector is
// (x_0, ..., x_N, u_0, ..., u_{N-1}); rows are the initial-state and dynamics
// equalities followed by the state and input boxes.
QpProblem gen_mpc(int nx, int horizon, std::uint64_t seed);

// Lasso regression with m_data = 100 n data points (overridable for tests).
// Variables (y, x, t); rows y - A x = -b, x - t <= 0, x + t >= 0.
QpProblem gen_lasso(int n, std::uint64_t seed,
                    std::optional<int> m_data = std::nullopt);

// Huber fitting with M = 1 and m_data = 100 n data points (overridable).
// Variables (x, u, r, s); rows A x - u - r + s = b, r >= 0, s >= 0.
QpProblem gen_huber(int n, std::uint64_t seed,
                    std::optional<int> m_data = std::nullopt);

// P = M M' + 1e-2 I, A with 15% density, l in (-1, 0], u in [0, 1).
QpProblem gen_random_qp(int n, int m, std::uint64_t seed);

QpProblem generate(const GeneratorSpec& spec);

}  // namespace superadmm

#endif  // SUPERADMM_GENERATORS_HPP_
