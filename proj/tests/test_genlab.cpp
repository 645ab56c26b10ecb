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
#include "ramify/genlab.hpp"
#include "test_util.hpp"

namespace ramify {
namespace {

using testing::S;

TEST(GaloisAction, Examples) {
  auto F3 = Field::make(3);
  const SymbolicMElement zero(S(F3, "t^-1", kExact), S(F3, "t^-5", kExact));
  const LaurentSeries one = LaurentSeries::constant(F3, F3->one());
  const auto x1 = SymbolicMElement::monomial(zero, one, 1, 0);
  const auto x2 = SymbolicMElement::monomial(zero, one, 0, 1);
  EXPECT_EQ(galois_action(x1, 1), SymbolicMElement::constant(zero, one));
  EXPECT_EQ(galois_action(x1 * x2, 2), x1);
  EXPECT_TRUE(galois_action(x2, 1).is_zero());
  EXPECT_THROW(galois_action(x1, 3), std::invalid_argument);
  // (sigma1 - 1) S(x1, kappa1) = wp(S(x1, 1)).
  const auto k1 = SymbolicMElement::constant(zero, zero.kappa1());
  EXPECT_EQ(galois_action(witt_S_M(x1, k1), 1), wp_M(witt_S_M(x1, SymbolicMElement::constant(zero, one))));
  // x^p rewrites to x + kappa.
  EXPECT_EQ(x1 * x1 * x1, x1 + k1);
}

TEST(VerifyGalois, Examples) {
  auto F3 = Field::make(3);
  GeneratorData gd = build_generators(GroupKind::Heis, S(F3, "t^-1"), S(F3, "t^-5"), S(F3, "0"));
  GaloisCheck c = verify_galois(gd);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(to_string(gd.action[0][2]), "2*x2");  // -x2
  gd = build_generators(GroupKind::Mod, S(F3, "t^-1"), S(F3, "2*t^-2"), S(F3, "0"));
  EXPECT_TRUE(verify_galois(gd).ok);
  EXPECT_EQ(to_string(gd.action[0][2]), "2*x2 + 2*x1 + 2*x1^2");  // -x2 + S(x1, 1)
  EXPECT_THROW(build_generators(GroupKind::Heis, S(F3, "t^-1"), S(F3, "2*t^-1"), S(F3, "0")), DependentGenerators);
  EXPECT_THROW(build_generators(GroupKind::Q8, S(F3, "t^-1"), S(F3, "t^-2"), S(F3, "0")), WrongCharacteristic);
}

TEST(VerifyGalois, D8AndModAgreeAtTwo) {
  auto F2 = Field::make(2);
  const GeneratorData d = build_generators(GroupKind::D8, S(F2, "t^-1"), S(F2, "t^-3"), S(F2, "t^-7"));
  const GeneratorData m = build_generators(GroupKind::Mod, S(F2, "t^-1"), S(F2, "t^-3"), S(F2, "t^-7"));
  EXPECT_EQ(d.s_term, m.s_term);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(d.action[i][j], m.action[i][j]);
}

TEST(WittIdentities, Examples) {
  EXPECT_TRUE(verify_witt_identities(S(Field::make(2), "t^-1")));
  EXPECT_TRUE(verify_witt_identities(S(Field::make(3), "t^-1")));
  EXPECT_TRUE(verify_witt_identities(S(Field::make(5), "t^-3")));
}

class GenlabProperties : public ::testing::TestWithParam<testing::FieldCase> {};

TEST_P(GenlabProperties, GaloisClosureAndNegativeControls) {
  const auto [p, f] = GetParam();
  auto F = Field::make(p, f);
  auto rng = instances::make_rng(555, static_cast<std::uint64_t>(p * 10 + f));
  const LaurentSeries one = LaurentSeries::constant(F, F->one());
  for (int trial = 0; trial < 10; ++trial) {
    const instances::PairInstance inst = instances::random_pair(F, 9, rng);
    const LaurentSeries k3 = instances::random_kappa3(F, 12, rng);
    for (GroupKind g : instances::groups_for(p)) {
      GeneratorData gd = build_generators(g, inst.beta1.value, inst.beta2.value, k3);
      EXPECT_TRUE(verify_galois(gd).ok) << to_string(g);
      const SymbolicMElement comm = commutator_on_x3(gd);
      EXPECT_EQ(comm, SymbolicMElement::constant(comm, one)) << to_string(g);
      // Corrupt one non-constant coefficient of s; constants are invisible to sigma - 1.
      int i = 0, j = 0;
      while (i == 0 && j == 0) i = instances::uniform(rng, 0, p - 1), j = instances::uniform(rng, 0, p - 1);
      gd.s_term.coeff(i, j) += LaurentSeries::monomial(F, instances::random_nonzero(*F, rng),
                                                       instances::uniform(rng, -6, 3));
      const GaloisCheck bad = verify_galois(gd);
      EXPECT_FALSE(bad.ok) << to_string(g);
      EXPECT_NE(bad.failing, 0);
      ASSERT_TRUE(bad.difference.has_value());
      EXPECT_FALSE(bad.difference->is_zero());
    }
    EXPECT_TRUE(verify_witt_identities(inst.beta1.value));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, GenlabProperties, ::testing::ValuesIn(testing::kFieldCases));

}  // namespace
}  // namespace ramify
