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

#include "ramify/instances.hpp"

#include "ramify/errors.hpp"

namespace ramify::instances {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

// Rejection sampling on raw 64-bit draws: std::uniform_int_distribution is
// not specified bit for bit, and outputs must not depend on the standard
// library.
int uniform(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

namespace {
bool coin(Rng& rng, double prob) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < prob; }
}  // namespace

FqElem random_elem(const Field& F, Rng& rng) {
  return F.from_code(static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(F.order()) - 1)));
}

FqElem random_nonzero(const Field& F, Rng& rng) {
  return F.from_code(static_cast<std::uint32_t>(uniform(rng, 1, static_cast<int>(F.order()) - 1)));
}

int random_break(int p, int lo, int hi, Rng& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    const int b = uniform(rng, lo, hi);
    if (b % p != 0) return b;
  }
  throw PreconditionViolated("no break prime to p in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

LaurentSeries random_series(const FieldPtr& F, int lo, int hi, Rng& rng, double density) {
  std::vector<Term> terms;
  for (int e = lo; e < hi; ++e)
    if (coin(rng, density)) terms.push_back({e, random_nonzero(*F, rng)});
  return LaurentSeries::from_terms(F, std::move(terms));
}

LaurentSeries random_reduced(const FieldPtr& F, int u, Rng& rng, double density) {
  const int p = F->p();
  if (u <= 0 || u % p == 0) throw PreconditionViolated("break " + std::to_string(u) + " is not prime to p");
  std::vector<Term> terms{{-u, random_nonzero(*F, rng)}};
  for (int e = -u + 1; e < 0; ++e)
    if (e % p != 0 && coin(rng, density)) terms.push_back({e, random_nonzero(*F, rng)});
  if (coin(rng, density)) terms.push_back({0, F->wp_coset_min(random_elem(*F, rng))});
  return LaurentSeries::from_terms(F, std::move(terms));
}

namespace {

ASGenerator as_generator(const LaurentSeries& a) {
  ASGenerator g = reduce_K(a);
  if (!g.df.is_finite() || !std::ranges::equal(g.value.terms(), a.terms()))
    throw std::logic_error("random generator is not reduced");
  return g;
}

}  // namespace

std::optional<PairInstance> random_pair(const FieldPtr& F, int u1, int u2, Rng& rng) {
  const bool same = u1 == u2;
  if (same && F->degree() == 1) return std::nullopt;
  PairInstance inst;
  inst.u1 = u1;
  inst.u2 = u2;
  const LaurentSeries b1 = random_reduced(F, u1, rng);
  LaurentSeries b2 = random_reduced(F, u2, rng);
  if (same) {
    // Leading coefficients independent over F_p.
    while (F->in_prime_field(F->div(b2.leading_coeff(), b1.leading_coeff()))) b2 = random_reduced(F, u2, rng);
  }
  inst.beta1 = as_generator(b1);
  inst.beta2 = as_generator(b2);
  return inst;
}

PairInstance random_pair(const FieldPtr& F, int umax, Rng& rng) {
  const int p = F->p();
  for (;;) {
    int u1 = random_break(p, 1, umax, rng);
    int u2 = random_break(p, 1, umax, rng);
    if (u1 > u2) std::swap(u1, u2);
    if (auto inst = random_pair(F, u1, u2, rng)) return *inst;
  }
}

PairInstance engineered_minus_one(const FieldPtr& F, int umax, Rng& rng) {
  const int p = F->p();
  if (p < 3 || umax < p - 1)
    throw PreconditionViolated("engineered instances need p >= 3 and umax >= p - 1");
  const Field& K = *F;
  for (int tries = 0; tries < 1000; ++tries) {
    const int u1 = random_break(p, 1, umax / (p - 1), rng);
    const LaurentSeries b1 = random_reduced(F, u1, rng);
    DecompData d;
    d.p = p;
    d.mu.assign(p, LaurentSeries(F));
    d.mu[0] = LaurentSeries::constant(F, random_elem(K, rng));
    for (int i = 1; i <= p - 2; ++i) {
      const int lo = -((umax - i * u1) / p);
      if (lo < 0 && coin(rng, 0.5)) d.mu[i] = random_series(F, lo, 1, rng, 0.4);
    }
    LaurentSeries eps(F);
    while (eps.is_zero()) eps = random_series(F, 1, uniform(rng, 2, 4), rng, 0.5);
    d.mu[p - 1] = LaurentSeries::constant(F, K.neg(K.one())) + eps;
    const ASGenerator b2 = reduce_K(recompose(d, b1));
    if (!b2.df.is_finite()) continue;
    const int u2 = -b2.df.value();
    if (u2 < u1 || u2 > umax) continue;
    PairInstance inst;
    inst.beta1 = as_generator(b1);
    inst.beta2 = b2;
    inst.u1 = u1;
    inst.u2 = u2;
    inst.engineered = true;
    if (!decompose(inst.beta1, inst.beta2).mu_last_is_minus_one) continue;
    return inst;
  }
  throw std::logic_error("engineered_minus_one: no instance found");
}

std::vector<GroupKind> groups_for(int p) {
  if (p == 2) return {GroupKind::Q8, GroupKind::D8, GroupKind::Mod};
  return {GroupKind::Heis, GroupKind::Mod};
}

LaurentSeries random_kappa3(const FieldPtr& F, int bmax, Rng& rng) {
  if (uniform(rng, 0, 3) == 0) return LaurentSeries(F);
  return random_reduced(F, random_break(F->p(), 1, bmax, rng), rng);
}

}  // namespace ramify::instances
