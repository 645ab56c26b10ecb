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

#pragma once

/**
 * @file classify.hpp
 * @brief Upper ramification breaks of the nonabelian degree-p^3 extensions
 * N = M(x3) over a C_p x C_p extension M = K(y1, y2).
 *
 * Two routes give the candidate third break ubar3: the closed-form bound B_G
 * read directly from (u1, u2, r, s, t, e, omega), and the break ladder, which
 * lifts the df of the relevant M-element to a lower break of N/K and
 * converts back to upper numbering. They must agree on every input.
 */

#include <optional>
#include <string>
#include <vector>

#include "ramify/decomp.hpp"

namespace ramify {

enum class GroupKind { Q8, D8, Heis, Mod };
/// Which subgroup is G_{l2} when u1 != u2.
enum class SubgroupChoice { Sigma1pSigma2, Sigma1Full };

std::string to_string(GroupKind g);
std::string to_string(SubgroupChoice c);
GroupKind parse_group(const std::string& s);
SubgroupChoice parse_choice(const std::string& s);

/// Throws WrongCharacteristic when the group does not exist for p.
void check_group(GroupKind g, int p);

struct BreakSequence {
  Rational u1, u2, u3;
  long long l1 = 0, l2 = 0, l3 = 0;
};

/// Closed-form df of beta2*y1 in K(y1)/K.
ExtDefect df_beta2_y1(const DecompData& d);
/// Closed-form df of -beta2*y1 + S(y1, beta1) in K(y1)/K.
ExtDefect df_dm_term(const DecompData& d);

/// The two K(y1)-elements above, y1 = root of wp(y) = beta1.
ExtElement beta2_y1_element(const CpExtension& ext, const DecompData& d);
ExtElement dm_term_element(const CpExtension& ext, const DecompData& d);
/// The same df values computed by reduce_LK_oracle.
OracleResult oracle_df_beta2_y1(const DecompData& d, const OracleOptions& opts = {});
OracleResult oracle_df_dm_term(const DecompData& d, const OracleOptions& opts = {});

/// Where the ladder takes its df values from.
enum class LadderSource { Oracle, ClosedForm };

/// The break p*a - (p-1)*l of the C_p-extension generated over one with break
/// l by an element with reduced valuation -a. Throws PreconditionViolated
/// unless a > l.
long long lift_break(int p, long long a, long long l);

struct Ladder {
  std::optional<long long> t0, t1, t2, t3, t4;
  std::optional<long long> s0, s1, s2, s3, s4;
  long long l2 = 0;
  long long lbar3 = 0;
  Rational ubar3;
  std::string branch;
  LadderSource source = LadderSource::Oracle;
  /// Oracle certificates of the df values used, in ladder order.
  std::vector<std::string> certificates;
};

Rational bound_BG(GroupKind g, const DecompData& d, const Q8Prep* prep, SubgroupChoice choice,
                  std::string* branch = nullptr);
Ladder ubar3(GroupKind g, const DecompData& d, const Q8Prep* prep, SubgroupChoice choice,
            LadderSource source = LadderSource::Oracle);

/// df values computed once and shared between ladders of several groups.
struct LadderDefects {
  OracleResult beta2_y1;
  OracleResult dm_term;
};
LadderDefects oracle_ladder_defects(const DecompData& d, const OracleOptions& opts = {});
Ladder ubar3(GroupKind g, const DecompData& d, const Q8Prep* prep, SubgroupChoice choice,
             const LadderDefects& defects);

/// Lower breaks from upper ones. Throws NonIntegralLower unless every l_i is
/// a positive integer prime to p.
BreakSequence upper_to_lower(int p, Rational u1, Rational u2, Rational u3);
BreakSequence lower_to_upper(int p, long long l1, long long l2, long long l3);

struct Composition {
  Rational u3;
  BreakSequence sequence;
  std::optional<int> b3;
  bool kappa3_was_reduced = false;
  WpDefect kappa3_df = WpDefect::infinite();
};

/// u3 = max(ubar3, b3). Throws DegenerateTower when ubar3 = b3.
Composition compose_with_kappa3(int p, int u1, int u2, Rational ubar3, const LaurentSeries& kappa3);

struct ClassificationResult {
  GroupKind group = GroupKind::Heis;
  SubgroupChoice choice = SubgroupChoice::Sigma1pSigma2;
  int p = 2;
  Rational B_G;
  Rational ubar3;
  Rational u3;
  BreakSequence sequence;
  bool hasse_arf_integral = false;
  LaurentSeries beta1, beta2, kappa3;
  std::optional<int> b3;
  DecompData decomp;
  std::optional<Q8Prep> q8;
  Ladder ladder;
  std::string bound_branch;
  std::vector<std::string> trace;
};

ClassificationResult classify(GroupKind g, const LaurentSeries& kappa1, const LaurentSeries& kappa2,
                              const LaurentSeries& kappa3, SubgroupChoice choice = SubgroupChoice::Sigma1pSigma2,
                              LadderSource source = LadderSource::Oracle);

std::string to_string(const Rational& r);

}  // namespace ramify
