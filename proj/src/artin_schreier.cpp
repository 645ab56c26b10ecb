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

#include "ramify/artin_schreier.hpp"

#include <map>

#include "ramify/errors.hpp"

namespace ramify {

std::string to_string(const WpDefect& d) {
  switch (d.kind()) {
    case WpDefect::Kind::Finite:
      return std::to_string(d.value());
    case WpDefect::Kind::Zero:
      return "zero";
    case WpDefect::Kind::Infinite:
      return "infinite";
  }
  return "?";
}

LaurentSeries wp(const LaurentSeries& a) { return a.frobenius() - a; }

std::vector<int> witt_S_coefficients(int p) {
  // S = -sum_{k=1}^{p-1} (binom(p,k)/p) X1^k X2^(p-k).
  std::vector<int> c(p, 0);
  long long binom = 1;
  for (int k = 1; k < p; ++k) {
    binom = binom * (p - k + 1) / k;
    const long long v = ((-(binom / p)) % p + p) % p;
    c[k] = static_cast<int>(v);
  }
  return c;
}

LaurentSeries witt_S(const LaurentSeries& a, const LaurentSeries& b) {
  const Field& F = a.field();
  const int p = F.p();
  const auto c = witt_S_coefficients(p);
  LaurentSeries sum(a.field_ptr());
  for (int k = 1; k < p; ++k) {
    if (c[k] == 0) continue;
    sum += (a.pow(k) * b.pow(p - k)).scaled(F.from_int(c[k]));
  }
  return sum;
}

ASGenerator reduce_K(const LaurentSeries& kappa) {
  const Field& F = kappa.field();
  const int p = F.p();
  const int prec = kappa.precision();

  std::map<int, FqElem> work;
  for (const Term& t : kappa.terms())
    if (t.exp <= 0) work[t.exp] = t.coeff;

  std::vector<Term> out;
  while (!work.empty()) {
    auto it = work.begin();
    const int e = it->first;
    const FqElem c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    if (e < 0 && e % p == 0) {
      // c t^(pe') = wp(d t^e') + d t^e' with d^p = c.
      auto [slot, fresh] = work.try_emplace(e / p, F.zero());
      slot->second = F.add(slot->second, F.frobenius_inv(c));
      continue;
    }
    if (e < 0) {
      out.push_back({e, c});
      continue;
    }
    const FqElem rep = F.wp_coset_min(c);
    if (!rep.is_zero()) out.push_back({0, rep});
  }

  // Every unknown term lies at exponent >= prec; for prec >= 1 that is inside
  // M_K, which wp covers, so the representative is exact.
  ASGenerator g{LaurentSeries(kappa.field_ptr()), true, WpDefect::infinite()};
  const bool has_negative = !out.empty() && out.front().exp < 0;
  if (prec >= 1) {
    g.value = LaurentSeries::from_terms(kappa.field_ptr(), std::move(out));
  } else {
    if (!has_negative)
      throw InsufficientPrecision("reduce_K: no surviving negative term below precision O(t^" +
                                  std::to_string(prec) + ")");
    g.value = LaurentSeries::from_terms(kappa.field_ptr(), std::move(out), prec);
  }
  if (has_negative) {
    g.df = WpDefect::finite(g.value.terms().front().exp);
  } else if (!g.value.is_zero()) {
    g.df = WpDefect::zero();
  } else {
    g.df = WpDefect::infinite();
  }
  return g;
}

std::string to_string(const BreakInfo& b) {
  switch (b.kind) {
    case BreakInfo::Kind::Ramified:
      return std::to_string(b.b);
    case BreakInfo::Kind::Unramified:
      return "unramified";
    case BreakInfo::Kind::Trivial:
      return "trivial";
  }
  return "?";
}

BreakInfo break_of(const LaurentSeries& kappa) {
  const ASGenerator g = reduce_K(kappa);
  switch (g.df.kind()) {
    case WpDefect::Kind::Finite:
      return {BreakInfo::Kind::Ramified, -g.df.value()};
    case WpDefect::Kind::Zero:
      return {BreakInfo::Kind::Unramified, 0};
    case WpDefect::Kind::Infinite:
      break;
  }
  return {BreakInfo::Kind::Trivial, 0};
}

IndependentPair independent_pair(const LaurentSeries& kappa1, const LaurentSeries& kappa2) {
  const Field& F = kappa1.field();
  const int p = F.p();
  IndependentPair out;
  out.beta1 = reduce_K(kappa1);
  out.beta2 = reduce_K(kappa2);
  if (!out.beta1.df.is_finite() || !out.beta2.df.is_finite()) return out;

  // Lines of the span: kappa1 and kappa2 + a kappa1 for a in F_p.
  std::optional<int> cancelling;
  for (int a = 0; a < p; ++a) {
    const ASGenerator comb = reduce_K(out.beta2.value + out.beta1.value.scaled(F.from_int(a)));
    if (!comb.df.is_finite()) return out;
    if (comb.df.value() > std::min(out.beta1.df.value(), out.beta2.df.value())) cancelling = a;
  }
  out.independent = true;

  const int b1 = -out.beta1.df.value();
  const int b2 = -out.beta2.df.value();
  if (b1 > b2) {
    std::swap(out.beta1, out.beta2);
    out.swapped = true;
  } else if (b1 == b2 && cancelling) {
    ASGenerator low = reduce_K(out.beta2.value + out.beta1.value.scaled(F.from_int(*cancelling)));
    out.beta2 = out.beta1;
    out.beta1 = std::move(low);
    out.renormalized = true;
    out.renormalize_a = *cancelling;
  }
  return out;
}

IndependentPair ordered_pair(const LaurentSeries& kappa1, const LaurentSeries& kappa2) {
  IndependentPair pair = independent_pair(kappa1, kappa2);
  if (!pair.independent)
    throw DependentGenerators("generators " + to_string(kappa1) + " and " + to_string(kappa2) +
                              " do not span a ramified C_p x C_p extension");
  return pair;
}

}  // namespace ramify
