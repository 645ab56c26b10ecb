// Copyright 2026 The ramify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "ramify/errors.hpp"
#include "test_util.hpp"

namespace ramify {
namespace {

using namespace instances;

class Instances : public ::testing::TestWithParam<testing::FieldCase> {};

TEST_P(Instances, ReducedHasRequestedBreak) {
  const auto [p, f] = GetParam();
  auto F = Field::make(p, f);
  auto rng = make_rng(3, p * 10 + f);
  for (int n = 0; n < 100; ++n) {
    const int u = random_break(p, 1, 25, rng);
    EXPECT_NE(u % p, 0);
    const LaurentSeries k = random_reduced(F, u, rng);
    const ASGenerator g = reduce_K(k);
    EXPECT_EQ(g.value, k) << to_string(k);
    const BreakInfo b = break_of(k);
    EXPECT_EQ(b.kind, BreakInfo::Kind::Ramified);
    EXPECT_EQ(b.b, u);
  }
}

TEST_P(Instances, PairsAreOrderedAndReduced) {
  const auto [p, f] = GetParam();
  auto F = Field::make(p, f);
  auto rng = make_rng(4, p * 10 + f);
  for (int n = 0; n < 60; ++n) {
    const PairInstance inst = random_pair(F, 20, rng);
    EXPECT_LE(inst.u1, inst.u2);
    EXPECT_LE(inst.u2, 20);
    EXPECT_EQ(break_of(inst.beta1.value).b, inst.u1);
    EXPECT_EQ(break_of(inst.beta2.value).b, inst.u2);
    EXPECT_NO_THROW(decompose(inst.beta1, inst.beta2));
  }
  EXPECT_EQ(random_pair(F, 7, 7, rng).has_value(), f > 1);
}

TEST_P(Instances, EngineeredMinusOne) {
  const auto [p, f] = GetParam();
  auto F = Field::make(p, f);
  auto rng = make_rng(5, p * 10 + f);
  if (p == 2) {
    EXPECT_THROW(engineered_minus_one(F, 20, rng), PreconditionViolated);
    return;
  }
  for (int n = 0; n < 30; ++n) {
    const PairInstance inst = engineered_minus_one(F, 25, rng);
    EXPECT_TRUE(inst.engineered);
    EXPECT_LE(inst.u2, 25);
    EXPECT_TRUE(decompose(inst.beta1, inst.beta2).mu_last_is_minus_one);
  }
}

TEST_P(Instances, Kappa3) {
  const auto [p, f] = GetParam();
  auto F = Field::make(p, f);
  auto rng = make_rng(6, p * 10 + f);
  int zeros = 0;
  for (int n = 0; n < 200; ++n) {
    const LaurentSeries k = random_kappa3(F, 30, rng);
    if (k.is_zero()) {
      ++zeros;
      continue;
    }
    const BreakInfo b = break_of(k);
    EXPECT_EQ(b.kind, BreakInfo::Kind::Ramified);
    EXPECT_LE(b.b, 30);
  }
  EXPECT_GT(zeros, 20);
  EXPECT_LT(zeros, 90);
}

INSTANTIATE_TEST_SUITE_P(Fields, Instances, ::testing::ValuesIn(testing::kFieldCases),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param.p) + "f" + std::to_string(info.param.f);
                         });

TEST(Instances, Deterministic) {
  auto F = Field::make(3, 2);
  auto a = make_rng(99, 7), b = make_rng(99, 7), c = make_rng(99, 8);
  const PairInstance x = random_pair(F, 20, a), y = random_pair(F, 20, b), z = random_pair(F, 20, c);
  EXPECT_EQ(x.beta1.value, y.beta1.value);
  EXPECT_EQ(x.beta2.value, y.beta2.value);
  EXPECT_FALSE(x.beta1.value == z.beta1.value && x.beta2.value == z.beta2.value);
}

TEST(Instances, Groups) {
  EXPECT_EQ(groups_for(2).size(), 3u);
  EXPECT_EQ(groups_for(5).size(), 2u);
}

}  // namespace
}  // namespace ramify
