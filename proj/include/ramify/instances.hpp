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

// Seeded random inputs for sweeps, self-tests and the acceptance harness.
// Every generator is a pure function of its Rng state.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ramify/classify.hpp"

namespace ramify::instances {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Independent stream `stream` of a run seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

int uniform(Rng& rng, int lo, int hi);
FqElem random_elem(const Field& F, Rng& rng);
FqElem random_nonzero(const Field& F, Rng& rng);
/// A random integer in [lo, hi] prime to p; lo <= hi and the range must
/// contain one.
int random_break(int p, int lo, int hi, Rng& rng);

/// Exact series with random terms at exponents in [lo, hi), each present with
/// probability density.
LaurentSeries random_series(const FieldPtr& F, int lo, int hi, Rng& rng, double density = 0.5);

/// Exact reduced generator with break u: leading term at -u, random terms
/// at negative exponents prime to p above it, and a coset-minimal constant.
LaurentSeries random_reduced(const FieldPtr& F, int u, Rng& rng, double density = 0.5);

struct PairInstance {
  ASGenerator beta1, beta2;
  int u1 = 0, u2 = 0;
  /// Built with mu_{p-1} = -1 + eps.
  bool engineered = false;
};

/// Reduced independent pair with the given breaks. nullopt when u1 = u2 and
/// q = p, where no such pair exists.
std::optional<PairInstance> random_pair(const FieldPtr& F, int u1, int u2, Rng& rng);
/// Breaks drawn uniformly with u1 <= u2 <= umax.
PairInstance random_pair(const FieldPtr& F, int umax, Rng& rng);
/// beta2 = mu_0^p + sum mu_i^p beta1^i with mu_{p-1} = -1 + eps, v(eps) > 0,
/// reduced, u2 <= umax. Throws PreconditionViolated unless p >= 3 and
/// umax >= p - 1.
PairInstance engineered_minus_one(const FieldPtr& F, int umax, Rng& rng);

/// Groups that exist for p, in display order.
std::vector<GroupKind> groups_for(int p);

/// A random kappa3 with break in [1, bmax] or, with probability 1/4, zero.
LaurentSeries random_kappa3(const FieldPtr& F, int bmax, Rng& rng);

}  // namespace ramify::instances
