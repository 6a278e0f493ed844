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


#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "superadmm/generators.hpp"
#include "superadmm/io.hpp"
#include "superadmm/solver.hpp"

namespace superadmm::cli {
namespace {

namespace fs = std::filesystem;

struct SolveOptions {
  std::string problem;
  std::string solution;
  std::string trace;
  std::string warm_start;
  std::string ordering = "amd";
  Settings settings;
};

struct GenerateOptions {
  std::string family;
  GeneratorSpec spec;
  std::string out;
};

struct BenchOptions {
  std::string family;
  std::vector<int> nx;
  std::vector<int> horizon;
  std::vector<int> n;
  std::vector<int> m;
  int seeds = 5;
  std::uint64_t first_seed = 0;
  double alpha = Settings{}.alpha;
  double eps_abs = Settings{}.eps_abs;
  int max_iter = Settings{}.max_iter;
  bool baseline = false;
  std::string out_dir = "bench_out";
};

const std::map<std::string, Ordering> kOrderings{
    {"amd", Ordering::kMinimumDegree}, {"natural", Ordering::kNatural}};

void add_solver_flags(CLI::App* cmd, Settings& s, std::string& ordering) {
  cmd->add_option("--eps-abs", s.eps_abs, "Absolute residual tolerance")
      ->capture_default_str();
  cmd->add_option("--alpha", s.alpha, "Penalty growth factor")->capture_default_str();
  cmd->add_option("--sigma", s.sigma, "Proximal weight")->capture_default_str();
  cmd->add_option("--tau", s.tau, "Stability bound shrink factor")
      ->capture_default_str();
  cmd->add_option("--rho0", s.rho0, "Initial penalty")->capture_default_str();
  cmd->add_option("--b0", s.b0, "Initial penalty bound")->capture_default_str();
  cmd->add_option("--max-iter", s.max_iter, "Iteration limit")->capture_default_str();
  cmd->add_option("--time-limit", s.time_limit, "Wall-clock limit in seconds");
  cmd->add_option("--ordering", ordering, "Fill-reducing ordering (amd|natural)")
      ->check(CLI::IsMember(kOrderings, CLI::ignore_case))
      ->capture_default_str();
}

std::string default_solution_path(const std::string& problem) {
  fs::path p(problem);
  p.replace_extension(".solution.json");
  return p.string();
}

void print_vector(std::ostream& out, const char* name,
                  const std::vector<double>& v) {
  out << std::left << std::setw(12) << name << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << "]\n";
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  QpProblem problem;
  std::optional<WarmStart> warm;
  Settings settings = o.settings;
  settings.ordering = kOrderings.at(CLI::detail::to_lower(o.ordering));
  settings.record_trace = !o.trace.empty();
  SolveResult r;
  try {
    validate_settings(settings);
    problem = load_problem(o.problem);
    if (!o.warm_start.empty()) warm = load_warm_start(o.warm_start);
    r = solve(problem, settings, warm);
  } catch (const std::exception& e) {
    err << "superadmm solve: " << e.what() << '\n';
    return kExitError;
  }

  const auto flags = out.flags();
  const auto precision = out.precision(6);
  out << std::left << std::setw(12) << "status" << to_string(r.status) << '\n'
      << std::setw(12) << "iterations" << r.iterations << '\n'
      << std::setw(12) << "r_prim" << r.r_prim << '\n'
      << std::setw(12) << "r_dual" << r.r_dual << '\n'
      << std::setw(12) << "runtime" << r.runtime << " s\n";
  if (problem.n <= 10) {
    out.precision(17);
    print_vector(out, "x", r.x);
    print_vector(out, "y", r.y);
  }
  out.flags(flags);
  out.precision(precision);

  const std::string solution =
      o.solution.empty() ? default_solution_path(o.problem) : o.solution;
  try {
    save_solution(r, solution);
    if (!o.trace.empty()) save_trace(r.trace, o.trace);
  } catch (const std::exception& e) {
    err << "superadmm solve: " << e.what() << '\n';
    return kExitError;
  }
  return exit_code_for(r.status);
}

int cmd_generate(GenerateOptions o, std::ostream& out, std::ostream& err) {
  const auto family = family_from_string(o.family);
  if (!family) {
    err << "superadmm generate: unknown family '" << o.family << "'\n";
    return kExitError;
  }
  o.spec.family = *family;
  try {
    const QpProblem p = generate(o.spec);
    save_problem(p, o.out);
    out << o.out << ": n=" << p.n << " m=" << p.m << " nnz(P)=" << p.P.nnz()
        << " nnz(A)=" << p.A.nnz() << '\n';
  } catch (const std::exception& e) {
    err << "superadmm generate: " << e.what() << '\n';
    return kExitError;
  }
  return kExitSolved;
}

struct BenchCell {
  GeneratorSpec spec;
  std::size_t size_index = 0;
};

struct BenchRow {
  BenchCell cell;
  std::string solver;
  std::string status;
  int iterations = 0;
  double runtime = 0.0;
  double r_prim = 0.0;
  double r_dual = 0.0;
};

int worker_count(std::size_t jobs) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUPERADMM_THREADS")) {
    unsigned v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    if (std::from_chars(env, end, v).ec == std::errc{} && v > 0) cap = v;
  }
  return static_cast<int>(std::min<std::size_t>(cap, std::max<std::size_t>(jobs, 1)));
}

// Broadcasts length-1 lists against the longest one; returns 0 if the lists
// are empty or have incompatible lengths.
std::size_t sweep_length(const std::vector<const std::vector<int>*>& lists) {
  std::size_t len = 0;
  for (const auto* l : lists) len = std::max(len, l->size());
  for (const auto* l : lists) {
    if (l->size() != len && l->size() != 1) return 0;
  }
  return len;
}

int at(const std::vector<int>& v, std::size_t i) {
  return v.size() == 1 ? v.front() : v[i];
}

std::vector<BenchRow> run_cells(const std::vector<BenchCell>& cells,
                                const BenchOptions& o) {
  const int runs = o.baseline ? 2 : 1;
  std::vector<BenchRow> rows(cells.size() * runs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      QpProblem problem;
      std::string gen_error;
      try {
        problem = generate(cells[c].spec);
      } catch (const std::exception& e) {
        gen_error = e.what();
      }
      for (int run = 0; run < runs; ++run) {
        BenchRow& row = rows[c * runs + run];
        row.cell = cells[c];
        row.solver = run == 0 ? "superadmm" : "admm";
        if (!gen_error.empty()) {
          row.status = "generator_error";
          continue;
        }
        Settings s;
        s.alpha = run == 0 ? o.alpha : 1.0;
        s.eps_abs = o.eps_abs;
        s.max_iter = o.max_iter;
        try {
          const SolveResult r = solve(problem, s);
          row.status = to_string(r.status);
          row.iterations = r.iterations;
          row.runtime = r.runtime;
          row.r_prim = r.r_prim;
          row.r_dual = r.r_dual;
        } catch (const std::exception&) {
          row.status = "error";
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = worker_count(cells.size());
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

void write_size(std::ostream& out, const GeneratorSpec& s) {
  out << s.nx << ',' << s.horizon << ',' << s.n << ',' << s.m;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  const auto family = family_from_string(o.family);
  if (!family) {
    err << "superadmm bench: unknown family '" << o.family << "'\n";
    return kExitError;
  }
  std::vector<const std::vector<int>*> sweep;
  switch (*family) {
    case Family::kMpc:
      sweep = {&o.nx, &o.horizon};
      break;
    case Family::kLasso:
    case Family::kHuber:
      sweep = {&o.n};
      break;
    case Family::kRandom:
      sweep = {&o.n, &o.m};
      break;
  }
  const std::size_t len = sweep_length(sweep);
  if (len == 0) {
    err << "superadmm bench: empty or mismatched size sweep\n";
    return kExitError;
  }
  for (const auto* l : sweep) {
    if (!std::is_sorted(l->begin(), l->end())) {
      err << "superadmm bench: size lists must be non-decreasing\n";
      return kExitError;
    }
  }
  if (o.seeds < 1) {
    err << "superadmm bench: --seeds must be >= 1\n";
    return kExitError;
  }

  std::vector<BenchCell> cells;
  for (std::size_t i = 0; i < len; ++i) {
    for (int k = 0; k < o.seeds; ++k) {
      BenchCell cell;
      cell.size_index = i;
      cell.spec.family = *family;
      if (*family == Family::kMpc) {
        cell.spec.nx = at(o.nx, i);
        cell.spec.horizon = at(o.horizon, i);
      } else {
        cell.spec.n = at(o.n, i);
        if (*family == Family::kRandom) cell.spec.m = at(o.m, i);
      }
      cell.spec.seed = o.first_seed + static_cast<std::uint64_t>(k);
      cells.push_back(cell);
    }
  }

  const std::vector<BenchRow> rows = run_cells(cells, o);

  const fs::path dir(o.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream summary(dir / "summary.csv");
  std::ofstream stats(dir / "stats.csv");
  if (!summary || !stats) {
    err << "superadmm bench: cannot write to " << dir.string() << '\n';
    return kExitError;
  }
  summary << std::setprecision(17)
          << "family,nx,horizon,n,m,seed,solver,status,iterations,runtime_s,"
             "r_prim,r_dual\n";
  for (const BenchRow& r : rows) {
    summary << o.family << ',';
    write_size(summary, r.cell.spec);
    summary << ',' << r.cell.spec.seed << ',' << r.solver << ',' << r.status << ','
            << r.iterations << ',' << r.runtime << ',' << r.r_prim << ','
            << r.r_dual << '\n';
  }

  stats << std::setprecision(9)
        << "family,nx,horizon,n,m,solver,runs,solved,iter_mean,iter_max,"
           "runtime_min_s,runtime_mean_s,runtime_max_s\n";
  out << std::left << std::setw(22) << "size" << std::setw(11) << "solver"
      << std::setw(9) << "solved" << std::setw(10) << "iter_avg" << std::setw(10)
      << "iter_max" << std::setw(12) << "t_min[s]" << std::setw(12) << "t_mean[s]"
      << "t_max[s]\n";
  for (std::size_t i = 0; i < len; ++i) {
    for (const char* solver : {"superadmm", "admm"}) {
      int runs = 0;
      int solved = 0;
      int iter_max = 0;
      double iter_sum = 0.0;
      double t_min = std::numeric_limits<double>::infinity();
      double t_max = 0.0;
      double t_sum = 0.0;
      const GeneratorSpec* spec = nullptr;
      for (const BenchRow& r : rows) {
        if (r.cell.size_index != i || r.solver != solver) continue;
        spec = &r.cell.spec;
        ++runs;
        solved += r.status == "solved";
        iter_sum += r.iterations;
        iter_max = std::max(iter_max, r.iterations);
        t_min = std::min(t_min, r.runtime);
        t_max = std::max(t_max, r.runtime);
        t_sum += r.runtime;
      }
      if (runs == 0) continue;
      stats << o.family << ',';
      write_size(stats, *spec);
      stats << ',' << solver << ',' << runs << ',' << solved << ','
            << iter_sum / runs << ',' << iter_max << ',' << t_min << ','
            << t_sum / runs << ',' << t_max << '\n';

      std::string size = *family == Family::kMpc
                             ? "nx=" + std::to_string(spec->nx) +
                                   " N=" + std::to_string(spec->horizon)
                             : "n=" + std::to_string(spec->n);
      if (*family == Family::kRandom) size += " m=" + std::to_string(spec->m);
      out << std::setw(22) << size << std::setw(11) << solver << std::setw(9)
          << (std::to_string(solved) + "/" + std::to_string(runs)) << std::setw(10)
          << std::setprecision(4) << iter_sum / runs << std::setw(10) << iter_max
          << std::setw(12) << t_min << std::setw(12) << t_sum / runs << t_max
          << '\n';
    }
  }
  out << "wrote " << (dir / "summary.csv").string() << " and "
      << (dir / "stats.csv").string() << '\n';
  return kExitSolved;
}

}  // namespace

int exit_code_for(Status status) {
  switch (status) {
    case Status::kSolved:
      return kExitSolved;
    case Status::kSolvedInaccurate:
      return kExitInaccurate;
    case Status::kPrimalInfeasible:
    case Status::kDualInfeasible:
      return kExitInfeasible;
    case Status::kMaxIterations:
    case Status::kTimeLimit:
      return kExitLimit;
    case Status::kNumericalError:
      return kExitError;
  }
  return kExitError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"superADMM quadratic programming solver", "superadmm"};
  app.require_subcommand(1);

  SolveOptions so;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("problem", so.problem, "Problem file (JSON)")->required();
  solve_cmd->add_option("-o,--solution", so.solution,
                        "Solution output (default: <problem>.solution.json)");
  solve_cmd->add_option("--trace", so.trace, "Per-iteration trace CSV output");
  solve_cmd->add_option("--warm-start", so.warm_start,
                        "Solution file whose x and y seed the iterates");
  add_solver_flags(solve_cmd, so.settings, so.ordering);

  GenerateOptions go;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a benchmark problem");
  gen_cmd->add_option("family", go.family, "mpc | lasso | huber | random")
      ->required();
  gen_cmd->add_option("--nx", go.spec.nx, "MPC state dimension (even)");
  gen_cmd->add_option("--horizon", go.spec.horizon, "MPC horizon");
  gen_cmd->add_option("--n", go.spec.n, "Features (lasso, huber) or variables");
  gen_cmd->add_option("--m", go.spec.m, "Constraints (random)");
  gen_cmd->add_option("--seed", go.spec.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("-o,--out", go.out, "Output problem file")->required();

  BenchOptions bo;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a size/seed sweep");
  bench_cmd->add_option("family", bo.family, "mpc | lasso | huber | random")
      ->required();
  bench_cmd->add_option("--nx", bo.nx, "MPC state dimensions")->delimiter(',');
  bench_cmd->add_option("--horizon", bo.horizon, "MPC horizons")->delimiter(',');
  bench_cmd->add_option("--n", bo.n, "Sizes")->delimiter(',');
  bench_cmd->add_option("--m", bo.m, "Constraint counts (random)")->delimiter(',');
  bench_cmd->add_option("--seeds", bo.seeds, "Seeds per size")->capture_default_str();
  bench_cmd->add_option("--first-seed", bo.first_seed, "First seed")
      ->capture_default_str();
  bench_cmd->add_option("--alpha", bo.alpha, "Penalty growth factor")
      ->capture_default_str();
  bench_cmd->add_option("--eps-abs", bo.eps_abs, "Absolute tolerance")
      ->capture_default_str();
  bench_cmd->add_option("--max-iter", bo.max_iter, "Iteration limit")
      ->capture_default_str();
  bench_cmd->add_flag("--baseline", bo.baseline,
                      "Also run plain ADMM (alpha = 1) on every instance");
  bench_cmd->add_option("--out-dir", bo.out_dir, "Directory for summary tables")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSolved : kExitError;
  }

  if (*solve_cmd) return cmd_solve(so, out, err);
  if (*gen_cmd) return cmd_generate(go, out, err);
  return cmd_bench(bo, out, err);
}

}  // namespace superadmm::cli
