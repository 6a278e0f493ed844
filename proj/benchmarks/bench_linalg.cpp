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


#include <benchmark/benchmark.h>

#include <vector>

#include "superadmm/generators.hpp"
#include "superadmm/kkt.hpp"
#include "superadmm/ldl.hpp"
#include "superadmm/ordering.hpp"

namespace superadmm {
namespace {

KktMatrix mpc_kkt(int horizon) {
  const QpProblem p = gen_mpc(10, horizon, 0);
  return assemble_kkt(p.P, p.A, 1e-6, std::vector<double>(p.m, 1.0));
}

void BM_MinimumDegreeOrdering(benchmark::State& state) {
  const KktMatrix kkt = mpc_kkt(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mindeg_order(kkt.upper));
  state.counters["dim"] = static_cast<double>(kkt.dim());
}
BENCHMARK(BM_MinimumDegreeOrdering)->Arg(10)->Arg(40)->Arg(160)->Unit(benchmark::kMicrosecond);

void BM_SymbolicFactorization(benchmark::State& state) {
  const KktMatrix kkt = mpc_kkt(static_cast<int>(state.range(0)));
  const std::vector<Index> perm = mindeg_order(kkt.upper);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_factorize(kkt.upper, perm));
}
BENCHMARK(BM_SymbolicFactorization)->Arg(10)->Arg(40)->Arg(160)->Unit(benchmark::kMicrosecond);

// Refactorization with new penalties, as done inside the solver loop.
void BM_NumericRefactorization(benchmark::State& state) {
  KktMatrix kkt = mpc_kkt(static_cast<int>(state.range(0)));
  KktSolver solver(kkt, state.range(1) ? Ordering::kMinimumDegree : Ordering::kNatural);
  std::vector<double> rho(kkt.m, 1.0);
  bool grow = true;
  for (auto _ : state) {
    for (double& r : rho) r = grow ? r * 10.0 : r / 10.0;
    grow = !grow;
    update_kkt_penalties(kkt, rho);
    solver.factorize(kkt);
  }
  state.counters["nnz_L"] = static_cast<double>(solver.symbolic().nnz_l);
}
BENCHMARK(BM_NumericRefactorization)
    ->Args({10, 0})
    ->Args({40, 0})
    ->Args({10, 1})
    ->Args({40, 1})
    ->Args({160, 1})
    ->ArgNames({"N", "mindeg"})
    ->Unit(benchmark::kMicrosecond);

void BM_KktSolve(benchmark::State& state) {
  const KktMatrix kkt = mpc_kkt(static_cast<int>(state.range(0)));
  KktSolver solver(kkt, Ordering::kMinimumDegree);
  solver.factorize(kkt);
  std::vector<double> rhs(kkt.dim(), 1.0);
  std::vector<double> sol(kkt.dim());
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(kkt, rhs, sol));
}
BENCHMARK(BM_KktSolve)->Arg(10)->Arg(40)->Arg(160)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace superadmm
