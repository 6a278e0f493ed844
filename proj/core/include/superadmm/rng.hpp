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

#ifndef SUPERADMM_RNG_HPP_
#define SUPERADMM_RNG_HPP_

#include <cstdint>
#include <random>

namespace superadmm {

// Deterministic random stream used by the problem generators.
//
// Each stream is a std::mt19937_64 seeded with splitmix64(seed ^
// splitmix64(stream)). Uniform doubles take the top 53 bits of one draw,
// Gaussian draws use the inverse normal CDF of one open-interval uniform, so
// the sequence is fully specified and reproducible across platforms and
// languages.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, 1).
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Normal with the given mean and variance.
  double normal(double mean = 0.0, double variance = 1.0);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace superadmm

#endif  // SUPERADMM_RNG_HPP_
