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

// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
// FAIL.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ramify/checks.hpp"
#include "ramify/errors.hpp"
#include "ramify/genlab.hpp"

namespace {

using namespace ramify;
using Q = Rational;

struct Criterion {
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;
  std::string extra;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

constexpr std::array<std::array<int, 2>, 6> kFields{{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}};
constexpr int kHarnessTrials = 200;
constexpr int kHarnessUmax = 25;

std::string field_name(const Field& F) { return "q=" + std::to_string(F.order()); }

bool report(int n, const Criterion& c) {
  const bool ok = c.failures == 0 && c.checks > 0;
  std::cout << "AC" << n << ' ' << (ok ? "PASS" : "FAIL") << "  checks=" << c.checks << " failures=" << c.failures;
  if (!c.extra.empty()) std::cout << ' ' << c.extra;
  if (!ok && !c.first_failure.empty()) std::cout << "  first: " << c.first_failure;
  std::cout << std::endl;
  return ok;
}

// Oracle agreement, parameter invariants and dual route on one harness.
void harness(Criterion& ac1, Criterion& ac2, Criterion& ac3, Criterion& ac4) {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream engineered;
  for (const auto& [p, f] : kFields) {
    auto F = Field::make(p, f);
    auto rng = instances::make_rng(20261017, static_cast<std::uint64_t>(p * 10 + f));
    int eng = 0;
    for (int trial = 0; trial < kHarnessTrials; ++trial) {
      const bool engineer = p >= 3 && trial % 4 == 0;
      const instances::PairInstance inst =
          engineer ? instances::engineered_minus_one(F, kHarnessUmax, rng) : instances::random_pair(F, kHarnessUmax, rng);
      eng += inst.engineered;
      const std::string tag = field_name(*F) + " " + checks::describe(inst);
      try {
        const checks::InstanceReport rep = checks::check_instance(inst, true);
        ac1.check(rep.beta2_y1.agree, tag + ": df_beta2_y1 closed " + to_string(rep.beta2_y1.closed) + " oracle " +
                                          to_string(rep.beta2_y1.oracle));
        ac2.check(rep.dm_term.agree, tag + ": df_dm_term closed " + to_string(rep.dm_term.closed) + " oracle " +
                                         to_string(rep.dm_term.oracle));
        ac3.check(rep.invariant_violations.empty(),
                  tag + ": " + (rep.invariant_violations.empty() ? "" : rep.invariant_violations[0]));
        for (int k = 0; k < rep.dual_route_checks; ++k) ac4.check(true, "");
        for (const auto& m : rep.dual_route_mismatches) {
          --ac4.checks;
          ac4.check(false, tag + ": " + m);
        }
      } catch (const std::exception& e) {
        for (Criterion* c : {&ac1, &ac2, &ac3, &ac4}) c->check(false, tag + ": " + e.what());
      }
    }
    if (p >= 3) {
      engineered << " " << field_name(*F) << ":" << eng;
      ac2.check(eng >= 30, field_name(*F) + ": only " + std::to_string(eng) + " engineered instances");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ac1.check(secs < 60.0, "harness took " + std::to_string(secs) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "time=%.2fs", secs);
  ac1.extra = buf;
  ac2.extra = "engineered" + engineered.str();
}

ClassificationResult run(GroupKind g, const FieldPtr& F, const char* b1, const char* b2,
                         SubgroupChoice ch = SubgroupChoice::Sigma1pSigma2) {
  return classify(g, parse_series(F, b1, 2), parse_series(F, b2, 2), LaurentSeries(F), ch);
}

void hasse_arf(Criterion& ac5) {
  long long d8 = 0;
  for (int f : {1, 2}) {
    auto F = Field::make(2, f);
    auto rng = instances::make_rng(5, static_cast<std::uint64_t>(f));
    for (int u1 = 1; u1 <= 15; u1 += 2)
      for (int u2 = u1; u2 <= 15; u2 += 2) {
        const auto inst = instances::random_pair(F, u1, u2, rng);
        if (!inst) continue;
        for (SubgroupChoice ch : {SubgroupChoice::Sigma1pSigma2, SubgroupChoice::Sigma1Full})
          for (bool with_k3 : {false, true}) {
            const LaurentSeries k3 = with_k3 ? instances::random_kappa3(F, 4 * u2, rng) : LaurentSeries(F);
            const std::string tag = field_name(*F) + " " + checks::describe(*inst) + " " + to_string(ch);
            try {
              const ClassificationResult r = classify(GroupKind::D8, inst->beta1.value, inst->beta2.value, k3, ch);
              ac5.check(r.u3.denominator() == 1 && r.hasse_arf_integral, tag + ": u3 = " + to_string(r.u3));
              ++d8;
            } catch (const std::exception& e) {
              ac5.check(false, tag + ": " + e.what());
            }
          }
      }
  }
  auto F3 = Field::make(3), F4 = Field::make(2, 2);
  try {
    const ClassificationResult mod = run(GroupKind::Mod, F3, "t^-1", "2*t^-2");
    ac5.check(mod.u3 == Q(7, 3) && mod.ladder.source == LadderSource::Oracle, "Mod witness u3 = " + to_string(mod.u3));
    const ClassificationResult q8 = run(GroupKind::Q8, F4, "t^-1", "g^2*t^-1");
    ac5.check(q8.u3 == Q(3, 2) && q8.ladder.source == LadderSource::Oracle, "Q8 witness u3 = " + to_string(q8.u3));
    ac5.extra = "d8_classified=" + std::to_string(d8) + " mod_u3=" + to_string(mod.u3) + " q8_u3=" + to_string(q8.u3);
  } catch (const std::exception& e) {
    ac5.check(false, std::string("witness: ") + e.what());
  }
}

void dichotomy(Criterion& ac6) {
  long long above = 0, with_b3 = 0;
  for (const auto& [p, f] : kFields) {
    auto F = Field::make(p, f);
    auto rng = instances::make_rng(6, static_cast<std::uint64_t>(p * 10 + f));
    for (GroupKind g : instances::groups_for(p))
      for (int u1 = 1; u1 <= 15; ++u1)
        for (int u2 = u1; u2 <= 15; ++u2) {
          if (u1 % p == 0 || u2 % p == 0) continue;
          const auto inst = instances::random_pair(F, u1, u2, rng);
          if (!inst) continue;
          for (SubgroupChoice ch : {SubgroupChoice::Sigma1pSigma2, SubgroupChoice::Sigma1Full}) {
            const LaurentSeries k3 = instances::random_kappa3(F, 2 * p * u2, rng);
            const std::string tag = to_string(g) + " " + field_name(*F) + " " + checks::describe(*inst);
            try {
              const ClassificationResult r = classify(g, inst->beta1.value, inst->beta2.value, k3, ch);
              if (r.u3 > r.B_G) {
                ++above;
                ac6.check(r.u3.denominator() == 1 && r.u3.numerator() % p != 0,
                          tag + ": u3 = " + to_string(r.u3) + " > B_G = " + to_string(r.B_G));
              } else {
                ac6.check(r.u3 == r.B_G, tag + ": u3 < B_G");
              }
              if (r.b3) {
                ++with_b3;
                ac6.check(Q(*r.b3) != r.ubar3, tag + ": b3 = ubar3");
              }
            } catch (const DegenerateTower& e) {
              ac6.check(false, tag + ": b3 = ubar3 (" + e.what() + ")");
            } catch (const std::exception& e) {
              ac6.check(false, tag + ": " + e.what());
            }
          }
        }
  }
  ac6.extra = "u3_above_bound=" + std::to_string(above) + " with_b3=" + std::to_string(with_b3);
}

void galois_closure(Criterion& ac7) {
  long long negatives = 0;
  for (const auto& [p, f] : kFields) {
    auto F = Field::make(p, f);
    auto rng = instances::make_rng(7, static_cast<std::uint64_t>(p * 10 + f));
    const LaurentSeries one = LaurentSeries::constant(F, F->one());
    for (int trial = 0; trial < 50; ++trial) {
      const instances::PairInstance inst = instances::random_pair(F, 9, rng);
      const LaurentSeries k3 = instances::random_kappa3(F, 12, rng);
      const std::string tag = field_name(*F) + " " + checks::describe(inst);
      try {
        for (GroupKind g : instances::groups_for(p)) {
          GeneratorData gd = build_generators(g, inst.beta1.value, inst.beta2.value, k3);
          ac7.check(verify_galois(gd).ok, to_string(g) + " " + tag + ": verify_galois false");
          const SymbolicMElement comm = commutator_on_x3(gd);
          ac7.check(comm == SymbolicMElement::constant(comm, one), to_string(g) + " " + tag + ": commutator");
          int i = 0, j = 0;
          while (i == 0 && j == 0) i = instances::uniform(rng, 0, p - 1), j = instances::uniform(rng, 0, p - 1);
          gd.s_term.coeff(i, j) +=
              LaurentSeries::monomial(F, instances::random_nonzero(*F, rng), instances::uniform(rng, -6, 3));
          ac7.check(!verify_galois(gd).ok, to_string(g) + " " + tag + ": corrupted s accepted");
          ++negatives;
        }
        ac7.check(verify_witt_identities(inst.beta1.value), tag + ": Witt identities");
      } catch (const std::exception& e) {
        ac7.check(false, tag + ": " + e.what());
      }
    }
  }
  ac7.extra = "negative_controls=" + std::to_string(negatives);
}

void soundness(Criterion& ac8) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto [p, f] = kFields[trial % kFields.size()];
    auto F = Field::make(p, f);
    auto rng = instances::make_rng(8, static_cast<std::uint64_t>(trial));
    const std::string tag = field_name(*F) + " trial " + std::to_string(trial);
    try {
      // kappa in K.
      const LaurentSeries k = instances::random_series(F, -40, 6, rng, 0.4);
      const LaurentSeries k2 = instances::random_series(F, -40, 6, rng, 0.4);
      const ASGenerator g = reduce_K(k), g2 = reduce_K(k2), g12 = reduce_K(k + k2);
      ac8.check(reduce_K(k - g.value).df == WpDefect::infinite(), tag + ": kappa - reduce_K(kappa) not in K^wp");
      ac8.check(reduce_K(g.value).value == g.value, tag + ": reduce_K not idempotent");
      ac8.check(!(g12.df < std::min(g.df, g2.df)), tag + ": ultrametric in K");
      if (g.df < g2.df || g2.df < g.df) ac8.check(g12.df == std::min(g.df, g2.df), tag + ": strict ultrametric in K");

      // ell in L.
      const int b = instances::random_break(p, 1, 9, rng);
      const CpExtension ext = CpExtension::make(instances::random_reduced(F, b, rng));
      auto random_ext = [&] {
        ExtElement e = ExtElement::zero(ext);
        for (int i = 0; i < p; ++i) e.coeffs[i] = instances::random_series(F, -3 * b - 4, 2, rng, 0.25);
        return e;
      };
      const ExtElement e = random_ext(), e2 = random_ext();
      const OracleResult r = reduce_LK_oracle(ext, e);
      const ExtElement diff = e - r.reduced;
      ac8.check(!reduce_LK_oracle(ext, diff).df.finite, tag + ": ell - reduced not in wp(L) + K");
      const ExtElement image = wp_ext(ext, r.preimage);
      bool member = true;
      const ExtElement gap = (diff - image).without_base();
      for (const auto& c : gap.coeffs) member = member && c.is_zero();
      ac8.check(member, tag + ": preimage certificate does not verify");
      auto rank = [](const ExtDefect& d) { return d.finite ? static_cast<long long>(d.value) : (1LL << 40); };
      const ExtDefect d1 = r.df, d2 = reduce_LK_oracle(ext, e2).df, d12 = reduce_LK_oracle(ext, e + e2).df;
      ac8.check(rank(d12) >= std::min(rank(d1), rank(d2)), tag + ": ultrametric in L");
      if (rank(d1) != rank(d2)) ac8.check(rank(d12) == std::min(rank(d1), rank(d2)), tag + ": strict ultrametric in L");
    } catch (const std::exception& e) {
      ac8.check(false, tag + ": " + e.what());
    }
  }
}

void conversions(Criterion& ac9) {
  auto rng = instances::make_rng(9);
  long long triples = 0;
  while (triples < 1000) {
    const int p = std::array{2, 3, 5}[instances::uniform(rng, 0, 2)];
    const long long l1 = instances::random_break(p, 1, 40, rng);
    const long long l2 = l1 + static_cast<long long>(instances::uniform(rng, 0, 40)) * p;
    const long long l3 = l2 + static_cast<long long>(instances::uniform(rng, 0, 80)) * p;
    // Valid lower sequences: l_i prime to p and l_{i+1} = l_i mod p.
    const std::string tag = "p=" + std::to_string(p) + " l=(" + std::to_string(l1) + "," + std::to_string(l2) + "," +
                            std::to_string(l3) + ")";
    try {
      const BreakSequence u = lower_to_upper(p, l1, l2, l3);
      const BreakSequence l = upper_to_lower(p, u.u1, u.u2, u.u3);
      ac9.check(l.l1 == l1 && l.l2 == l2 && l.l3 == l3, tag + ": lower -> upper -> lower");
      const BreakSequence u_again = lower_to_upper(p, l.l1, l.l2, l.l3);
      ac9.check(u_again.u1 == u.u1 && u_again.u2 == u.u2 && u_again.u3 == u.u3, tag + ": upper round-trip");
    } catch (const std::exception& e) {
      ac9.check(false, tag + ": " + e.what());
    }
    ++triples;
  }
  for (int n = 0; n < 1000; ++n) {
    const int p = std::array{2, 3, 5}[instances::uniform(rng, 0, 2)];
    const int b = instances::random_break(p, 1, 30, rng);
    const Q x(instances::uniform(rng, 0, 5000), instances::uniform(rng, 1, 97));
    const Q y = hasse_herbrand(p, b, hasse_herbrand(p, b, x, HHDirection::Psi), HHDirection::Phi);
    ac9.check(y == x, "p=" + std::to_string(p) + " b=" + std::to_string(b) + ": phi(psi(" + to_string(x) + ")) = " +
                          to_string(y));
  }
}

}  // namespace

int main() {
  std::array<Criterion, 10> c;
  harness(c[1], c[2], c[3], c[4]);
  hasse_arf(c[5]);
  dichotomy(c[6]);
  galois_closure(c[7]);
  soundness(c[8]);
  conversions(c[9]);
  bool all = true;
  for (int n = 1; n <= 9; ++n) all = report(n, c[n]) && all;
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return all ? 0 : 1;
}
