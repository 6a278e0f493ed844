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


#include "superadmm/rng.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

namespace superadmm {
namespace {

TEST(SplitMix64, ReferenceOutputs) {
  // First outputs of the reference splitmix64 generator started from 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(Rng, SameSeedAndStreamRepeat) {
  Rng a(42, 7);
  Rng b(42, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, StreamsAndSeedsDiffer) {
  Rng a(42, 7);
  Rng b(42, 8);
  Rng c(43, 7);
  int same_ab = 0;
  int same_ac = 0;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    same_ab += va == b.next_u64();
    same_ac += va == c.next_u64();
  }
  EXPECT_EQ(same_ab, 0);
  EXPECT_EQ(same_ac, 0);
}

TEST(Rng, UniformStaysInUnitInterval) {
  Rng r(1, 1);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform(-3.0, 2.0);
    ASSERT_GE(u, -3.0);
    ASSERT_LT(u, 2.0);
  }
}

TEST(Rng, NormalSecondArgumentIsVariance) {
  Rng r(9, 3);
  const int count = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const double v = r.normal(1.5, 4.0);
    ASSERT_TRUE(std::isfinite(v));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / count;
  const double var = sq / count - mean * mean;
  EXPECT_NEAR(mean, 1.5, 0.02);
  EXPECT_NEAR(var, 4.0, 0.05);
}

TEST(Rng, BernoulliFrequency) {
  Rng r(3, 3);
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += r.bernoulli(0.15);
  EXPECT_NEAR(hits / 100000.0, 0.15, 0.005);
}

}  // namespace
}  // namespace superadmm
