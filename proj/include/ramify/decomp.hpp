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
 * @file decomp.hpp
 * @brief beta2 = mu_0^p + sum_{i=1}^{p-1} mu_i^p beta1^i modulo K^wp, and the
 * scalars read off from it.
 *
 * r = -v(sum_{i=1}^{p-2} mu_i^p beta1^i), s = -v(mu_{p-1}^p beta1^{p-1}).
 * When mu_{p-1} = -1 + eps with v(eps) > 0, t = -v(eps^p beta1^{p-1}).
 * For p = 2 the single coefficient mu = mu_1 has v(mu) = -m, u2 = u1 + 2m,
 * and for m = 0 it splits as mu = omega + eps with omega a constant.
 */

#include <optional>
#include <string>
#include <vector>

#include "ramify/cp_ext.hpp"

namespace ramify {

struct DecompData {
  int p = 2;
  /// The reduced inputs.
  LaurentSeries beta1, beta2;
  int u1 = 0;
  int u2 = 0;
  std::vector<LaurentSeries> mu;
  std::optional<int> r;
  std::optional<int> s;
  std::optional<int> t;
  LaurentSeries epsilon;
  std::optional<int> e;
  FqElem omega{};
  int m = 0;
  bool mu_last_is_minus_one = false;
  /// p = 2 only: eps was dropped because v(eps) >= u1/2.
  bool epsilon_truncated = false;
  std::vector<std::string> notes;
};

/// beta1, beta2 must be reduced with finite df and u1 <= u2. Throws
/// NonCoprimeValuation, PreconditionViolated, InsufficientPrecision.
DecompData decompose(const ASGenerator& beta1, const ASGenerator& beta2);

/// mu_0^p + sum mu_i^p beta1^i.
LaurentSeries recompose(const DecompData& d, const LaurentSeries& beta1);

/// The quaternion-specific terms: s1 in K(x1) and the valuation of s2 in
/// M = K(x1, x2).
struct Q8Prep {
  LaurentSeries mu;
  FqElem mu0{};
  int m = 0;
  FqElem omega{};
  LaurentSeries epsilon;
  std::optional<int> e;
  bool epsilon_truncated = false;
  bool omega_cubed_is_one = false;
  /// s1 = a * x1 in L = K(x1), wp(x1) = kappa1.
  ExtElement s1;
  /// v_L(s1), nullopt when s1 = 0.
  std::optional<int> v_s1;
  /// s2 as coefficients of x1*X and X, X = x2 - mu x1.
  LaurentSeries s2_x1X;
  LaurentSeries s2_X;
  int v_s2 = 0;
};

/// Throws WrongCharacteristic unless p = 2.
Q8Prep q8_prepare(const ASGenerator& kappa1, const ASGenerator& kappa2);

}  // namespace ramify
