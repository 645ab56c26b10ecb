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

#include "ramify/classify.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <stdexcept>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

using Opt = std::optional<long long>;

/// max over the present candidates; DegenerateTower when none is present.
long long max_present(std::initializer_list<Opt> xs, const char* what) {
  Opt best;
  for (const Opt& x : xs)
    if (x && (!best || *x > *best)) best = x;
  if (!best) throw DegenerateTower(std::string("every candidate of ") + what + " is absent");
  return *best;
}

Rational max_present_q(std::initializer_list<std::optional<Rational>> xs, const char* what) {
  std::optional<Rational> best;
  for (const auto& x : xs)
    if (x && (!best || *x > *best)) best = x;
  if (!best) throw DegenerateTower(std::string("every candidate of ") + what + " is absent");
  return *best;
}

Opt lin(std::optional<int> x, long long a, long long c) {
  if (!x) return std::nullopt;
  return a * *x + c;
}

bool coprime_to(long long n, int p) { return n % p != 0; }

}  // namespace

std::string to_string(GroupKind g) {
  switch (g) {
    case GroupKind::Q8:
      return "Q8";
    case GroupKind::D8:
      return "D8";
    case GroupKind::Heis:
      return "Heis";
    case GroupKind::Mod:
      return "Mod";
  }
  return "?";
}

std::string to_string(SubgroupChoice c) {
  return c == SubgroupChoice::Sigma1pSigma2 ? "Sigma1pSigma2" : "Sigma1Full";
}

GroupKind parse_group(const std::string& s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "q8" || l == "q") return GroupKind::Q8;
  if (l == "d8" || l == "d") return GroupKind::D8;
  if (l == "heis" || l == "h") return GroupKind::Heis;
  if (l == "mod" || l == "m") return GroupKind::Mod;
  throw ParseError("unknown group \"" + s + "\" (expected q8, d8, heis, mod)");
}

SubgroupChoice parse_choice(const std::string& s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "sigma1psigma2" || l == "sigma1+sigma2") return SubgroupChoice::Sigma1pSigma2;
  if (l == "sigma1full" || l == "sigma1") return SubgroupChoice::Sigma1Full;
  throw ParseError("unknown subgroup choice \"" + s + "\" (expected Sigma1pSigma2, Sigma1Full)");
}

void check_group(GroupKind g, int p) {
  const bool ok = (g == GroupKind::Q8 || g == GroupKind::D8) ? p == 2 : (g == GroupKind::Mod || p > 2);
  if (!ok) throw WrongCharacteristic("group " + to_string(g) + " does not occur for p = " + std::to_string(p));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ExtDefect df_beta2_y1(const DecompData& d) {
  const int p = d.p;
  const long long v = max_present({lin(d.s, p, d.u1), lin(d.r, p, -(p - 2LL) * d.u1)}, "df(beta2 y1)");
  return ExtDefect::make_finite(static_cast<int>(-v));
}

ExtDefect df_dm_term(const DecompData& d) {
  const int p = d.p;
  const Opt rterm = lin(d.r, p, -(p - 2LL) * d.u1);
  long long v;
  if (d.mu_last_is_minus_one) {
    v = max_present({Opt(static_cast<long long>(p * p - 2 * p + 2) * d.u1), lin(d.t, p, d.u1), rterm},
                    "df(-beta2 y1 + S(y1, beta1))");
  } else {
    v = max_present({Opt(static_cast<long long>(p * p - p + 1) * d.u1), lin(d.s, p, d.u1), rterm},
                    "df(-beta2 y1 + S(y1, beta1))");
  }
  return ExtDefect::make_finite(static_cast<int>(-v));
}

ExtElement beta2_y1_element(const CpExtension& ext, const DecompData& d) {
  return ExtElement::monomial(ext, d.beta2, 1);
}

ExtElement dm_term_element(const CpExtension& ext, const DecompData& d) {
  const auto c = witt_S_coefficients(d.p);
  const Field& F = *ext.field_ptr();
  ExtElement e = -beta2_y1_element(ext, d);
  for (int k = 1; k < d.p; ++k) {
    if (c[k] == 0) continue;
    e = e + ExtElement::monomial(ext, d.beta1.pow(d.p - k).scaled(F.from_int(c[k])), k);
  }
  return e;
}

OracleResult oracle_df_beta2_y1(const DecompData& d, const OracleOptions& opts) {
  const CpExtension ext = CpExtension::make(d.beta1);
  return reduce_LK_oracle(ext, beta2_y1_element(ext, d), opts);
}

OracleResult oracle_df_dm_term(const DecompData& d, const OracleOptions& opts) {
  const CpExtension ext = CpExtension::make(d.beta1);
  return reduce_LK_oracle(ext, dm_term_element(ext, d), opts);
}

long long lift_break(int p, long long a, long long l) {
  if (a <= l)
    throw PreconditionViolated("lift_break needs a > l, got a = " + std::to_string(a) + ", l = " + std::to_string(l));
  return p * a - (p - 1) * l;
}

Rational bound_BG(GroupKind g, const DecompData& d, const Q8Prep* prep, SubgroupChoice choice, std::string* branch) {
  check_group(g, d.p);
  const int p = d.p;
  const long long u1 = d.u1, u2 = d.u2;
  const bool swapped = u1 != u2 && choice == SubgroupChoice::Sigma1Full;
  auto q = [](std::optional<int> x, Rational add) -> std::optional<Rational> {
    if (!x) return std::nullopt;
    return Rational(*x) + add;
  };
  std::string tag;
  Rational B;
  switch (g) {
    case GroupKind::D8:
      tag = swapped ? "D8: 2u2" : "D8: u1+u2";
      B = swapped ? Rational(2 * u2) : Rational(u1 + u2);
      break;
    case GroupKind::Heis:
      tag = "Heis: max{s+u1, r+u1/p}";
      B = max_present_q({q(d.s, u1), q(d.r, Rational(u1, p))}, "B_H");
      break;
    case GroupKind::Mod:
      if (swapped) {
        tag = "Mod: p*u2";
        B = Rational(p * u2);
      } else if (d.mu_last_is_minus_one) {
        tag = "Mod: max{(p-1)u1+u1/p, t+u1, r+u1/p}";
        B = max_present_q({Rational((p - 1) * u1) + Rational(u1, p), q(d.t, u1), q(d.r, Rational(u1, p))}, "B_M");
      } else {
        tag = "Mod: max{p*u1, s+u1, r+u1/p}";
        B = max_present_q({Rational(p * u1), q(d.s, u1), q(d.r, Rational(u1, p))}, "B_M");
      }
      break;
    case GroupKind::Q8: {
      if (!prep) throw PreconditionViolated("Q8 bound needs the quaternion preparation");
      if (u1 != u2 || !prep->omega_cubed_is_one) {
        tag = "Q8: 2u2";
        B = Rational(2 * u2);
      } else if (!prep->e) {
        tag = "Q8: 3u1/2 (eps = 0)";
        B = Rational(3 * u1, 2);
      } else {
        tag = "Q8: max{3u1/2, 2u1-2e}";
        B = std::max(Rational(3 * u1, 2), Rational(2 * u1 - 2LL * *prep->e));
      }
      break;
    }
  }
  if (branch) *branch = tag;
  return B;
}

namespace {

long long oracle_defect(Ladder& L, const OracleResult& r) {
  L.certificates.push_back(r.certificate);
  if (!r.df.finite) throw std::logic_error("ladder: oracle reports an element of wp(L) + K");
  return -r.df.value;
}

template <class Defect>
Ladder ladder_impl(GroupKind g, const DecompData& d, const Q8Prep* prep, SubgroupChoice choice, LadderSource source,
                   Defect defect_fn) {
  check_group(g, d.p);
  const int p = d.p;
  const long long u1 = d.u1, u2 = d.u2;
  Ladder L;
  L.source = source;
  auto defect = [&](bool dm) -> long long { return defect_fn(L, dm); };
  L.l2 = u1 + p * (u2 - u1);
  const bool swapped = u1 != u2 && choice == SubgroupChoice::Sigma1Full;

  switch (g) {
    case GroupKind::Heis:
      L.t0 = defect(false);
      L.s0 = lift_break(p, *L.t0, L.l2);
      L.lbar3 = *L.s0;
      L.branch = "s0";
      break;
    case GroupKind::D8:
    case GroupKind::Mod:
      if (swapped) {
        L.t0 = defect(false);
        L.s0 = lift_break(p, *L.t0, L.l2);
        L.t2 = static_cast<long long>(p * p - p + 1) * u2;
        L.s2 = lift_break(p, *L.t2, u1);
        L.lbar3 = std::max(*L.s0, *L.s2);
        L.branch = *L.s2 > *L.s0 ? "max(s0, s2) = s2" : "max(s0, s2) = s0";
      } else {
        L.t1 = defect(true);
        L.s1 = lift_break(p, *L.t1, L.l2);
        L.lbar3 = *L.s1;
        L.branch = d.mu_last_is_minus_one ? "s1 (mu_{p-1} = -1 mod M_K)" : "s1";
      }
      break;
    case GroupKind::Q8: {
      if (!prep) throw PreconditionViolated("Q8 ladder needs the quaternion preparation");
      L.t4 = -prep->v_s2;
      L.s4 = *L.t4;
      if (!prep->v_s1) {
        L.lbar3 = *L.s4;
        L.branch = "s4 (s1 = 0)";
      } else {
        L.t3 = -*prep->v_s1;
        L.s3 = lift_break(p, *L.t3, L.l2);
        L.lbar3 = std::max(*L.s3, *L.s4);
        L.branch = *L.s3 > *L.s4 ? "max(s3, s4) = s3" : "max(s3, s4) = s4";
      }
      break;
    }
  }
  L.ubar3 = Rational(u2) + Rational(L.lbar3 - L.l2, static_cast<long long>(p) * p);
  return L;
}

}  // namespace

Ladder ubar3(GroupKind g, const DecompData& d, const Q8Prep* prep, SubgroupChoice choice, LadderSource source) {
  return ladder_impl(g, d, prep, choice, source, [&](Ladder& L, bool dm) -> long long {
    if (source == LadderSource::ClosedForm) return -(dm ? df_dm_term(d) : df_beta2_y1(d)).value;
    return oracle_defect(L, dm ? oracle_df_dm_term(d) : oracle_df_beta2_y1(d));
  });
}

LadderDefects oracle_ladder_defects(const DecompData& d, const OracleOptions& opts) {
  return {oracle_df_beta2_y1(d, opts), oracle_df_dm_term(d, opts)};
}

Ladder ubar3(GroupKind g, const DecompData& d, const Q8Prep* prep, SubgroupChoice choice,
             const LadderDefects& defects) {
  return ladder_impl(g, d, prep, choice, LadderSource::Oracle, [&](Ladder& L, bool dm) -> long long {
    return oracle_defect(L, dm ? defects.dm_term : defects.beta2_y1);
  });
}

BreakSequence upper_to_lower(int p, Rational u1, Rational u2, Rational u3) {
  if (!(u1 <= u2 && u2 <= u3))
    throw PreconditionViolated("upper breaks must be nondecreasing: " + to_string(u1) + ", " + to_string(u2) +
                               ", " + to_string(u3));
  BreakSequence s{u1, u2, u3};
  const Rational l1 = u1;
  const Rational l2 = l1 + (u2 - u1) * p;
  const Rational l3 = l2 + (u3 - u2) * (p * p);
  for (const Rational& l : {l1, l2, l3})
    if (l.denominator() != 1 || l <= 0 || !coprime_to(l.numerator(), p))
      throw NonIntegralLower("upper breaks (" + to_string(u1) + ", " + to_string(u2) + ", " + to_string(u3) +
                             ") give lower break " + to_string(l) + ", not a positive integer prime to p");
  s.l1 = l1.numerator();
  s.l2 = l2.numerator();
  s.l3 = l3.numerator();
  return s;
}

BreakSequence lower_to_upper(int p, long long l1, long long l2, long long l3) {
  for (long long l : {l1, l2, l3})
    if (l <= 0 || !coprime_to(l, p))
      throw NonIntegralLower("lower break " + std::to_string(l) + " is not a positive integer prime to p");
  if (!(l1 <= l2 && l2 <= l3)) throw PreconditionViolated("lower breaks must be nondecreasing");
  BreakSequence s;
  s.l1 = l1;
  s.l2 = l2;
  s.l3 = l3;
  s.u1 = Rational(l1);
  s.u2 = s.u1 + Rational(l2 - l1, p);
  s.u3 = s.u2 + Rational(l3 - l2, static_cast<long long>(p) * p);
  return s;
}

Composition compose_with_kappa3(int p, int u1, int u2, Rational ub, const LaurentSeries& kappa3) {
  Composition c;
  const ASGenerator g = reduce_K(kappa3);
  c.kappa3_was_reduced = !std::ranges::equal(g.value.terms(), kappa3.terms());
  c.kappa3_df = g.df;
  c.u3 = ub;
  if (g.df.is_finite()) {
    c.b3 = -g.df.value();
    if (Rational(*c.b3) == ub)
      throw DegenerateTower("b3 = " + std::to_string(*c.b3) + " coincides with ubar3");
    c.u3 = std::max(ub, Rational(*c.b3));
  }
  c.sequence = upper_to_lower(p, Rational(u1), Rational(u2), c.u3);
  return c;
}

ClassificationResult classify(GroupKind g, const LaurentSeries& kappa1, const LaurentSeries& kappa2,
                              const LaurentSeries& kappa3, SubgroupChoice choice, LadderSource source) {
  const int p = kappa1.field().p();
  check_group(g, p);
  ClassificationResult res;
  res.group = g;
  res.choice = choice;
  res.p = p;

  const IndependentPair pair = ordered_pair(kappa1, kappa2);
  res.beta1 = pair.beta1.value;
  res.beta2 = pair.beta2.value;
  if (pair.swapped) res.trace.push_back("inputs reordered so that u1 <= u2");
  if (pair.renormalized)
    res.trace.push_back("equal breaks with cancelling leading terms: beta1 = reduce(kappa2 + " +
                        std::to_string(pair.renormalize_a) + "*kappa1)");

  res.decomp = decompose(pair.beta1, pair.beta2);
  const DecompData& d = res.decomp;
  for (const auto& note : d.notes) res.trace.push_back(note);
  if (d.u1 == d.u2) res.trace.push_back("u1 = u2: subgroup choice ignored");
  if (g == GroupKind::Q8) res.q8 = q8_prepare(pair.beta1, pair.beta2);
  const Q8Prep* prep = res.q8 ? &*res.q8 : nullptr;
  if (g == GroupKind::Q8 && d.u1 == d.u2 && prep->omega_cubed_is_one && !prep->e)
    res.trace.push_back("omega^3 = 1 and eps = 0: e treated as absent, 2u1-2e dropped");

  res.B_G = bound_BG(g, d, prep, choice, &res.bound_branch);
  res.ladder = ubar3(g, d, prep, choice, source);
  res.ubar3 = res.ladder.ubar3;
  res.trace.push_back("bound: " + res.bound_branch);
  res.trace.push_back("ladder: " + res.ladder.branch +
                      (source == LadderSource::Oracle ? " (oracle df values)" : " (closed-form df values)"));
  if (res.B_G != res.ubar3)
    throw std::logic_error("B_G = " + to_string(res.B_G) + " but the ladder gives ubar3 = " + to_string(res.ubar3));

  const Composition comp = compose_with_kappa3(p, d.u1, d.u2, res.ubar3, kappa3);
  res.kappa3 = reduce_K(kappa3).value;
  if (comp.kappa3_was_reduced) res.trace.push_back("kappa3 reduced to " + to_string(res.kappa3));
  res.b3 = comp.b3;
  res.u3 = comp.u3;
  res.sequence = comp.sequence;
  res.hasse_arf_integral = res.u3.denominator() == 1;
  return res;
}

}  // namespace ramify
