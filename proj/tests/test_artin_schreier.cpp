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

using testing::S;

TEST(Wp, Examples) {
  auto F2 = Field::make(2), F3 = Field::make(3);
  EXPECT_TRUE(wp(LaurentSeries(F2)).is_zero());
  EXPECT_EQ(to_string(wp(S(F2, "t^-1", kExact)), false), "t^-2 + t^-1");
  // (t^-1 + 1)^3 - (t^-1 + 1) = t^-3 - t^-1 over F_3.
  EXPECT_EQ(to_string(wp(S(F3, "t^-1 + 1", kExact)), false), "t^-3 + 2*t^-1");
}

TEST(WittS, Coefficients) {
  EXPECT_EQ(witt_S_coefficients(2), (std::vector<int>{0, 1}));
  EXPECT_EQ(witt_S_coefficients(3), (std::vector<int>{0, 2, 2}));
  EXPECT_EQ(witt_S_coefficients(5), (std::vector<int>{0, 4, 3, 3, 4}));
  auto F3 = Field::make(3);
  const auto a = S(F3, "t^-1", kExact), b = S(F3, "t^-2 + 1", kExact);
  EXPECT_EQ(witt_S(a, b), witt_S(b, a));
}

TEST(ReduceK, Examples) {
  auto F2 = Field::make(2);
  ASGenerator g = reduce_K(S(F2, "t^-2"));
  EXPECT_EQ(to_string(g.value, false), "t^-1");
  EXPECT_EQ(g.df, WpDefect::finite(-1));
  g = reduce_K(S(F2, "t^-3"));
  EXPECT_EQ(to_string(g.value, false), "t^-3");
  EXPECT_EQ(g.df, WpDefect::finite(-3));
  g = reduce_K(S(F2, "1 + t"));
  EXPECT_EQ(to_string(g.value, false), "1");
  EXPECT_EQ(g.df, WpDefect::zero());
  EXPECT_TRUE(g.value.is_exact());
  g = reduce_K(S(F2, "t^-4"));
  EXPECT_EQ(to_string(g.value, false), "t^-1");
  EXPECT_THROW(reduce_K(S(F2, "t^3 + O(t^0)")), InsufficientPrecision);
}

TEST(BreakOf, Examples) {
  auto F2 = Field::make(2), F5 = Field::make(5);
  EXPECT_EQ(break_of(S(F2, "t^-3")).b, 3);
  EXPECT_EQ(break_of(S(F2, "t^-4")).b, 1);
  EXPECT_EQ(break_of(S(F2, "t^2")).kind, BreakInfo::Kind::Trivial);
  EXPECT_EQ(break_of(S(F5, "t^2")).kind, BreakInfo::Kind::Trivial);
  EXPECT_EQ(break_of(S(F2, "1")).kind, BreakInfo::Kind::Unramified);
}

TEST(IndependentPair, Examples) {
  auto F3 = Field::make(3);
  IndependentPair ip = independent_pair(S(F3, "t^-1"), S(F3, "t^-5"));
  EXPECT_TRUE(ip.independent);
  EXPECT_EQ(to_string(ip.beta1.value, false), "t^-1");
  EXPECT_EQ(to_string(ip.beta2.value, false), "t^-5");
  EXPECT_FALSE(independent_pair(S(F3, "t^-1"), S(F3, "2*t^-1")).independent);
  EXPECT_THROW(ordered_pair(S(F3, "t^-1"), S(F3, "2*t^-1")), DependentGenerators);

  auto F4 = Field::make(2, 2);
  EXPECT_TRUE(independent_pair(S(F4, "t^-1"), S(F4, "g*t^-1")).independent);
  ip = independent_pair(S(F3, "t^-5"), S(F3, "t^-1"));
  EXPECT_TRUE(ip.swapped);
  EXPECT_EQ(-ip.beta1.df.value(), 1);
  // Equal breaks whose leading terms cancel: the smaller break goes first.
  ip = independent_pair(S(F3, "t^-4 + t^-1"), S(F3, "2*t^-4"));
  EXPECT_TRUE(ip.independent);
  EXPECT_TRUE(ip.renormalized);
  EXPECT_EQ(-ip.beta1.df.value(), 1);
  EXPECT_EQ(-ip.beta2.df.value(), 4);
}

// df by exhaustive search: maximize the valuation of the negative-or-constant
// part of kappa + wp(x) over every x supported on exponents [lo, 0].
WpDefect brute_df(const LaurentSeries& kappa, int lo) {
  const FieldPtr& F = kappa.field_ptr();
  const int q = static_cast<int>(F->order());
  const int n = 1 - lo;
  std::vector<int> digits(n, 0);
  WpDefect best = WpDefect::finite(INT32_MIN / 2);
  for (;;) {
    std::vector<Term> terms;
    for (int k = 0; k < n; ++k)
      if (digits[k]) terms.push_back({lo + k, FqElem{static_cast<std::uint32_t>(digits[k])}});
    const LaurentSeries x = LaurentSeries::from_terms(F, terms);
    const LaurentSeries y = (kappa + wp(x)).truncated(1);
    WpDefect d = WpDefect::infinite();
    if (const auto v = y.valuation()) d = *v < 0 ? WpDefect::finite(*v) : WpDefect::zero();
    if (best < d) best = d;
    int k = 0;
    while (k < n && ++digits[k] == q) digits[k++] = 0;
    if (k == n) break;
  }
  return best;
}

TEST(ReduceK, MatchesExhaustiveSearch) {
  for (int p : {2, 3}) {
    auto F = Field::make(p);
    auto rng = instances::make_rng(77, static_cast<std::uint64_t>(p));
    const int lo = p == 2 ? -6 : -4;
    for (int trial = 0; trial < 60; ++trial) {
      const LaurentSeries k = instances::random_series(F, -12, 3, rng, 0.3);
      EXPECT_EQ(reduce_K(k).df, brute_df(k, lo)) << to_string(k);
    }
  }
}

class ReduceKProperties : public ::testing::TestWithParam<testing::FieldCase> {};

TEST_P(ReduceKProperties, Random) {
  const auto [p, f] = GetParam();
  auto F = Field::make(p, f);
  auto rng = instances::make_rng(4242, static_cast<std::uint64_t>(p * 10 + f));
  for (int trial = 0; trial < 150; ++trial) {
    const LaurentSeries k = instances::random_series(F, -30, 4, rng, 0.3);
    const LaurentSeries k2 = instances::random_series(F, -30, 4, rng, 0.3);
    const ASGenerator g = reduce_K(k);
    // Idempotence.
    const ASGenerator gg = reduce_K(g.value);
    EXPECT_EQ(gg.df, g.df);
    EXPECT_EQ(gg.value, g.value);
    // Coset soundness.
    EXPECT_EQ(reduce_K(g.value - k).df, WpDefect::infinite());
    // Reduced form: negative exponents prime to p, df = its valuation.
    for (const Term& t : g.value.terms()) EXPECT_TRUE(t.exp == 0 || (t.exp < 0 && t.exp % p != 0));
    if (g.df.is_finite()) EXPECT_EQ(*g.value.valuation(), g.df.value());
    // Ultrametric law.
    const WpDefect d1 = g.df, d2 = reduce_K(k2).df, d12 = reduce_K(k + k2).df;
    EXPECT_FALSE(d12 < std::min(d1, d2));
    if (!(d1 == d2)) EXPECT_EQ(d12, std::min(d1, d2));
    // Frobenius twist stays in the same coset.
    EXPECT_EQ(reduce_K(k.frobenius()).df, g.df);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, ReduceKProperties, ::testing::ValuesIn(testing::kFieldCases));

}  // namespace
}  // namespace ramify
