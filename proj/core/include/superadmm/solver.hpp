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

#ifndef SUPERADMM_SOLVER_HPP_
#define SUPERADMM_SOLVER_HPP_

#include <chrono>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superadmm/kkt.hpp"
#include "superadmm/ldl.hpp"
#include "superadmm/qp_problem.hpp"
#include "superadmm/result.hpp"
#include "superadmm/settings.hpp"

namespace superadmm {

struct WarmStart {
  std::vector<double> x;
  std::vector<double> y;
};

// Per-constraint penalties rho_i (the diagonal of R) and the bound b with
// 1/b <= rho_i <= b.
struct PenaltyState {
  std::vector<double> rho;
  double b = 0.0;
  double alpha = 0.0;
};

struct SolverState {
  std::vector<double> x;
  std::vector<double> z;
  std::vector<double> y;
  std::vector<double> nu;
  std::vector<double> z_tilde;  // A x up to the linear-solve error
  std::vector<double> x_prev;
  std::vector<double> y_prev;
  PenaltyState penalty;
  double r_prim = 0.0;
  double r_dual = 0.0;
  double eps_solve = 0.0;
  int k = 0;
};

// Elementwise clip of v into [l, u]. Clipped entries are exactly l_i or u_i.
std::vector<double> project_box(std::span<const double> v,
                                std::span<const double> l,
                                std::span<const double> u);

// (||Ax - z||_inf, ||Px + q + A'y||_inf)
std::pair<double, double> compute_residuals(const QpProblem& problem,
                                            std::span<const double> x,
                                            std::span<const double> z,
                                            std::span<const double> y);

// Grows rho_i by alpha on rows where z sits exactly on a bound and shrinks it
// by alpha elsewhere, clamped to [1/b_new, b_new].
void update_penalties(PenaltyState& penalty, std::span<const double> z,
                      std::span<const double> l, std::span<const double> u,
                      double b_new);

// tau * b when eps_solve >= r_prim, b otherwise.
double update_stability_bound(double b, double eps_solve, double r_prim,
                              double tau);

// delta_y with entries that point into an infinite bound and lie within
// tol ||delta_y||_inf set to exactly zero. This is the vector the primal
// certificate test evaluates and the one returned on PrimalInfeasible.
std::vector<double> primal_certificate(std::span<const double> delta_y,
                                       const QpProblem& problem, double tol);

// Primal infeasibility certificate test on dy = primal_certificate(y^k - y^{k-1}):
//   ||A' dy||_inf <= tol ||dy||_inf  and  u'dy_+ + l'dy_- < -tol ||dy||_inf
// with 0 * inf = 0.
bool check_primal_infeasibility(std::span<const double> delta_y,
                                const QpProblem& problem, double tol);

// Dual infeasibility certificate test on delta_x = x^k - x^{k-1}.
bool check_dual_infeasibility(std::span<const double> delta_x,
                              const QpProblem& problem, double tol);

// One solve context. Holds the KKT system, its factorization and the iterates;
// not shareable across threads during a solve.
class Solver {
 public:
  Solver(QpProblem problem, Settings settings);

  // Resets the iterates to (x0, y0), z0 = A x0, R = rho0 I, b = b0.
  void initialize(const std::optional<WarmStart>& warm_start = std::nullopt);

  // One ADMM step followed by the bound and penalty updates and a refactor
  // if any penalty changed. Throws FactorizationError.
  void iterate_once();

  // Runs iterations from the current state until a termination rule fires.
  SolveResult run();

  const SolverState& state() const { return state_; }
  SolverState& mutable_state() { return state_; }
  const QpProblem& problem() const { return problem_; }
  const Settings& settings() const { return settings_; }
  const KktMatrix& kkt() const { return kkt_; }

 private:
  void refactor();

  QpProblem problem_;
  Settings settings_;
  KktMatrix kkt_;
  KktSolver kkt_solver_;
  SolverState state_;
  std::vector<double> rho_factored_;
  bool factored_ = false;
  std::vector<double> rhs_;
  std::vector<double> sol_;
  std::vector<double> ax_;
};

SolveResult solve(const QpProblem& problem, const Settings& settings = {},
                  const std::optional<WarmStart>& warm_start = std::nullopt);

}  // namespace superadmm

#endif  // SUPERADMM_SOLVER_HPP_
