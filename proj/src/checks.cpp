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

#include "ramify/checks.hpp"

#include <algorithm>

namespace ramify::checks {

namespace {

int mod_p(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

DfComparison compare(std::string what, ExtDefect closed, const OracleResult& r) {
  DfComparison c{std::move(what), closed, r.df, r.certificate, false};
  c.agree = closed == r.df;
  return c;
}

}  // namespace

std::vector<std::string> parameter_violations(const DecompData& d) {
  std::vector<std::string> out;
  const int p = d.p;
  if (d.s && mod_p(*d.s + d.u1, p) != 0)
    out.push_back("s = " + std::to_string(*d.s) + " is not -u1 mod p");
  if (d.r) {
    if (mod_p(*d.r, p) == 0) out.push_back("r = " + std::to_string(*d.r) + " is 0 mod p");
    if (mod_p(*d.r + d.u1, p) == 0) out.push_back("r = " + std::to_string(*d.r) + " is -u1 mod p");
  }
  if (!d.r && !d.s) {
    out.push_back("r and s both absent");
  } else if (std::max(d.r.value_or(INT32_MIN), d.s.value_or(INT32_MIN)) != d.u2) {
    out.push_back("max(r, s) != u2 = " + std::to_string(d.u2));
  }
  if (d.mu_last_is_minus_one && d.t && d.s && *d.t >= *d.s)
    out.push_back("t = " + std::to_string(*d.t) + " is not below s");
  return out;
}

InstanceReport check_instance(const instances::PairInstance& inst, bool dual_route, const OracleOptions& opts) {
  InstanceReport rep;
  rep.decomp = decompose(inst.beta1, inst.beta2);
  const DecompData& d = rep.decomp;
  rep.invariant_violations = parameter_violations(d);
  const LadderDefects defects = oracle_ladder_defects(d, opts);
  rep.beta2_y1 = compare("df(beta2 y1)", df_beta2_y1(d), defects.beta2_y1);
  rep.dm_term = compare("df(-beta2 y1 + S(y1, beta1))", df_dm_term(d), defects.dm_term);
  if (!dual_route) return rep;

  std::optional<Q8Prep> prep;
  if (d.p == 2) prep = q8_prepare(inst.beta1, inst.beta2);
  for (GroupKind g : instances::groups_for(d.p)) {
    for (SubgroupChoice c : {SubgroupChoice::Sigma1pSigma2, SubgroupChoice::Sigma1Full}) {
      const Q8Prep* pp = prep ? &*prep : nullptr;
      const Rational B = bound_BG(g, d, pp, c);
      const Ladder L = ubar3(g, d, pp, c, defects);
      ++rep.dual_route_checks;
      if (B != L.ubar3)
        rep.dual_route_mismatches.push_back(to_string(g) + "/" + to_string(c) + ": B_G = " + to_string(B) +
                                            ", ladder = " + to_string(L.ubar3));
    }
  }
  return rep;
}

std::string describe(const instances::PairInstance& inst) {
  return "beta1 = " + to_string(inst.beta1.value) + ", beta2 = " + to_string(inst.beta2.value) +
         (inst.engineered ? " (engineered)" : "");
}

}  // namespace ramify::checks
