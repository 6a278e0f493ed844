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

#include "superadmm/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace superadmm {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> difference(std::span<const double> a,
                               std::span<const double> b) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace

std::vector<double> project_box(std::span<const double> v,
                                std::span<const double> l,
                                std::span<const double> u) {
  assert(v.size() == l.size() && v.size() == u.size());
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::min(std::max(v[i], l[i]), u[i]);
  }
  return out;
}

std::pair<double, double> compute_residuals(const QpProblem& problem,
                                            std::span<const double> x,
                                            std::span<const double> z,
                                            std::span<const double> y) {
  std::vector<double> ax = spmv(problem.A, x);
  double r_prim = 0.0;
  for (Index i = 0; i < problem.m; ++i) {
    r_prim = std::max(r_prim, std::fabs(ax[i] - z[i]));
  }
  std::vector<double> grad = problem.q;
  symmetric_spmv_add(problem.P, x, grad);
  spmv_transpose_add(problem.A, y, grad);
  return {r_prim, infinity_norm(grad)};
}

void update_penalties(PenaltyState& penalty, std::span<const double> z,
                      std::span<const double> l, std::span<const double> u,
                      double b_new) {
  const double alpha = penalty.alpha;
  const double floor = 1.0 / b_new;
  for (std::size_t i = 0; i < penalty.rho.size(); ++i) {
    double& rho = penalty.rho[i];
    if (z[i] == l[i] || z[i] == u[i]) {
      rho = std::min(b_new, alpha * rho);
    } else {
      rho = std::max(floor, rho / alpha);
    }
  }
  penalty.b = b_new;
}

double update_stability_bound(double b, double eps_solve, double r_prim,
                              double tau) {
  // With r_prim == 0 every row is strictly inactive with zero multiplier and
  // there is no primal accuracy for the bound to protect.
  return (r_prim > 0.0 && eps_solve >= r_prim) ? tau * b : b;
}

std::vector<double> primal_certificate(std::span<const double> delta_y,
                                       const QpProblem& problem, double tol) {
  const double band = tol * infinity_norm(delta_y);
  std::vector<double> dy(delta_y.begin(), delta_y.end());
  for (Index i = 0; i < problem.m; ++i) {
    const bool into_infinity = (dy[i] > 0.0 && std::isinf(problem.u[i])) ||
                               (dy[i] < 0.0 && std::isinf(problem.l[i]));
    if (into_infinity && std::fabs(dy[i]) <= band) dy[i] = 0.0;
  }
  return dy;
}

bool check_primal_infeasibility(std::span<const double> delta_y,
                                const QpProblem& problem, double tol) {
  const double norm = infinity_norm(delta_y);
  if (norm == 0.0) return false;
  const double band = tol * norm;
  const std::vector<double> dy = primal_certificate(delta_y, problem, tol);

  // Support function u'dy_+ + l'dy_-, with 0 * inf = 0.
  double support = 0.0;
  for (Index i = 0; i < problem.m; ++i) {
    if (dy[i] > 0.0) {
      if (std::isinf(problem.u[i])) return false;
      support += problem.u[i] * dy[i];
    } else if (dy[i] < 0.0) {
      if (std::isinf(problem.l[i])) return false;
      support += problem.l[i] * dy[i];
    }
  }
  if (!(support < -band)) return false;

  const std::vector<double> at_dy = spmv_transpose(problem.A, dy);
  return infinity_norm(at_dy) <= band;
}

bool check_dual_infeasibility(std::span<const double> delta_x,
                              const QpProblem& problem, double tol) {
  const double norm = infinity_norm(delta_x);
  if (norm == 0.0) return false;
  const double band = tol * norm;

  double q_dx = 0.0;
  for (Index j = 0; j < problem.n; ++j) q_dx += problem.q[j] * delta_x[j];
  if (!(q_dx < -band)) return false;

  if (infinity_norm(symmetric_spmv(problem.P, delta_x)) > band) return false;

  const std::vector<double> a_dx = spmv(problem.A, delta_x);
  for (Index i = 0; i < problem.m; ++i) {
    const bool lower_finite = std::isfinite(problem.l[i]);
    const bool upper_finite = std::isfinite(problem.u[i]);
    if (lower_finite && upper_finite) {
      if (std::fabs(a_dx[i]) > band) return false;
    } else if (lower_finite) {
      if (a_dx[i] < -band) return false;
    } else if (upper_finite) {
      if (a_dx[i] > band) return false;
    }
  }
  return true;
}

Solver::Solver(QpProblem problem, Settings settings)
    : problem_(std::move(problem)),
      settings_((validate_settings(settings), settings)),
      kkt_(assemble_kkt(problem_.P, problem_.A, settings_.sigma,
                        std::vector<double>(problem_.m, settings_.rho0))),
      kkt_solver_(kkt_, settings_.ordering),
      rhs_(kkt_.dim(), 0.0),
      sol_(kkt_.dim(), 0.0),
      ax_(problem_.m, 0.0) {
  initialize();
}

void Solver::initialize(const std::optional<WarmStart>& warm_start) {
  const auto n = static_cast<std::size_t>(problem_.n);
  const auto m = static_cast<std::size_t>(problem_.m);
  SolverState& s = state_;
  s.x.assign(n, 0.0);
  s.y.assign(m, 0.0);
  if (warm_start) {
    if (warm_start->x.size() != n || warm_start->y.size() != m) {
      throw std::invalid_argument("warm start has wrong dimensions");
    }
    s.x = warm_start->x;
    s.y = warm_start->y;
  }
  s.z = spmv(problem_.A, s.x);
  s.nu.assign(m, 0.0);
  s.z_tilde = s.z;
  s.x_prev = s.x;
  s.y_prev = s.y;
  s.penalty.rho.assign(m, settings_.rho0);
  s.penalty.b = settings_.b0;
  s.penalty.alpha = settings_.alpha;
  s.r_prim = s.r_dual = std::numeric_limits<double>::infinity();
  s.eps_solve = 0.0;
  s.k = 0;
  factored_ = false;
}

void Solver::refactor() {
  if (factored_ && rho_factored_ == state_.penalty.rho) return;
  update_kkt_penalties(kkt_, state_.penalty.rho);
  kkt_solver_.factorize(kkt_);
  rho_factored_ = state_.penalty.rho;
  factored_ = true;
}

void Solver::iterate_once() {
  refactor();

  const Index n = problem_.n;
  const Index m = problem_.m;
  SolverState& s = state_;
  const std::vector<double>& rho = s.penalty.rho;

  for (Index j = 0; j < n; ++j) {
    rhs_[j] = settings_.sigma * s.x[j] - problem_.q[j];
  }
  for (Index i = 0; i < m; ++i) rhs_[n + i] = s.z[i] - s.y[i] / rho[i];

  s.eps_solve = kkt_solver_.solve(kkt_, rhs_, sol_);

  s.x_prev = s.x;
  s.y_prev = s.y;
  std::copy(sol_.begin(), sol_.begin() + n, s.x.begin());
  std::copy(sol_.begin() + n, sol_.end(), s.nu.begin());

  // z_tilde + y/rho collapses to z + nu/rho, and y + rho (z_tilde - z_new) to
  // nu + rho (z - z_new). Forming z_tilde first would round away (nu - y)/rho
  // whenever rho is large, freezing y short of nu.
  s.r_prim = 0.0;
  for (Index i = 0; i < m; ++i) {
    const double z_old = s.z[i];
    const double y_old = s.y[i];
    const double nu = s.nu[i];
    const double z = std::min(std::max(z_old + nu / rho[i], problem_.l[i]),
                              problem_.u[i]);
    const double y = nu + rho[i] * (z_old - z);
    s.z_tilde[i] = z_old + (nu - y_old) / rho[i];
    s.z[i] = z;
    s.y[i] = y;
    s.r_prim = std::max(s.r_prim, std::fabs(y - y_old) / rho[i]);
  }
  std::vector<double>& grad = rhs_;  // reused as scratch until next iteration
  std::copy(problem_.q.begin(), problem_.q.end(), grad.begin());
  std::span<double> grad_x(grad.data(), n);
  symmetric_spmv_add(problem_.P, s.x, grad_x);
  spmv_transpose_add(problem_.A, s.y, grad_x);
  s.r_dual = infinity_norm(grad_x);

  const double b_new =
      update_stability_bound(s.penalty.b, s.eps_solve, s.r_prim, settings_.tau);
  s.penalty.b = b_new;
  if (b_new >= 1.0) update_penalties(s.penalty, s.z, problem_.l, problem_.u, b_new);
  ++s.k;
}

SolveResult Solver::run() {
  const auto start = Clock::now();
  SolverState& s = state_;
  const double eps_abs = settings_.eps_abs;

  SolveResult result;
  std::vector<double> best_x = s.x;
  std::vector<double> best_y = s.y;
  double best_r_prim = s.r_prim;
  double best_r_dual = s.r_dual;
  double best_score = std::numeric_limits<double>::infinity();

  auto finish = [&](Status status) {
    result.status = status;
    result.iterations = s.k;
    result.runtime = seconds_since(start);
    if (status == Status::kSolvedInaccurate || status == Status::kNumericalError) {
      result.x = best_x;
      result.y = best_y;
      result.r_prim = best_r_prim;
      result.r_dual = best_r_dual;
      return result;
    }
    result.x = s.x;
    result.y = s.y;
    result.r_prim = s.r_prim;
    result.r_dual = s.r_dual;
    return result;
  };

  const int first_k = s.k;
  while (true) {
    if (s.k - first_k >= settings_.max_iter) return finish(Status::kMaxIterations);
    if (seconds_since(start) > settings_.time_limit) {
      return finish(Status::kTimeLimit);
    }

    try {
      iterate_once();
    } catch (const FactorizationError&) {
      return finish(Status::kNumericalError);
    }

    if (settings_.record_trace) {
      result.trace.push_back({s.k - 1, s.r_prim, s.r_dual, s.eps_solve,
                              s.penalty.b, seconds_since(start)});
    }
    const double score = std::max(s.r_prim, s.r_dual);
    if (score < best_score) {
      best_score = score;
      best_x = s.x;
      best_y = s.y;
      best_r_prim = s.r_prim;
      best_r_dual = s.r_dual;
    }

    if (s.r_prim <= eps_abs && s.r_dual <= eps_abs) {
      // z_tilde carries the linear-solve error; confirm against A x itself.
      std::fill(ax_.begin(), ax_.end(), 0.0);
      spmv_add(problem_.A, s.x, ax_);
      double true_prim = 0.0;
      for (Index i = 0; i < problem_.m; ++i) {
        true_prim = std::max(true_prim, std::fabs(ax_[i] - s.z[i]));
      }
      if (true_prim <= eps_abs) return finish(Status::kSolved);
    }

    if (s.k % settings_.infeas_check_period == 0) {
      std::vector<double> dy = difference(s.y, s.y_prev);
      if (check_primal_infeasibility(dy, problem_, settings_.infeas_tol)) {
        finish(Status::kPrimalInfeasible);
        result.y = primal_certificate(dy, problem_, settings_.infeas_tol);
        return result;
      }
      std::vector<double> dx = difference(s.x, s.x_prev);
      if (check_dual_infeasibility(dx, problem_, settings_.infeas_tol)) {
        finish(Status::kDualInfeasible);
        result.x = std::move(dx);
        return result;
      }
    }

    if (s.penalty.b < 1.0) return finish(Status::kSolvedInaccurate);
  }
}

SolveResult solve(const QpProblem& problem, const Settings& settings,
                  const std::optional<WarmStart>& warm_start) {
  const auto start = Clock::now();
  Solver solver(problem, settings);
  if (warm_start) solver.initialize(warm_start);
  SolveResult result = solver.run();
  result.runtime = seconds_since(start);
  return result;
}

}  // namespace superadmm
