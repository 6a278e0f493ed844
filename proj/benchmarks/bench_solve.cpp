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

#include "superadmm/generators.hpp"
#include "superadmm/solver.hpp"

namespace superadmm {
namespace {

void run(benchmark::State& state, const QpProblem& problem, const Settings& settings = {}) {
  int iterations = 0;
  for (auto _ : state) {
    const SolveResult r = solve(problem, settings);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.x.data());
  }
  state.counters["iterations"] = iterations;
}

void BM_SolveRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Settings s;
  s.alpha = 10.0;
  run(state, gen_random_qp(n, 3 * n / 2, 0), s);
}
BENCHMARK(BM_SolveRandom)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_SolveMpcHorizon(benchmark::State& state) {
  run(state, gen_mpc(10, static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_SolveMpcHorizon)->Arg(10)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_SolveLasso(benchmark::State& state) {
  run(state, gen_lasso(static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_SolveLasso)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SolveHuber(benchmark::State& state) {
  run(state, gen_huber(static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_SolveHuber)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace superadmm
