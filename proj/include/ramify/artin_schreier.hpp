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

// The Weierstrass map wp(x) = x^p - x on K = F_q((t)), the Witt polynomial
// S(X1, X2), and reduction of Artin-Schreier generators modulo K^wp.

#include <string>
#include <vector>

#include "ramify/series.hpp"

namespace ramify {

/// The group valuation of a coset kappa + K^wp.
class WpDefect {
 public:
  enum class Kind { Finite, Zero, Infinite };

  static WpDefect finite(int v) { return WpDefect(Kind::Finite, v); }
  static WpDefect zero() { return WpDefect(Kind::Zero, 0); }
  static WpDefect infinite() { return WpDefect(Kind::Infinite, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// Only meaningful when finite.
  int value() const noexcept { return value_; }

  /// Order compatible with the valuation: Finite(n) < Zero < Infinite.
  friend bool operator<(const WpDefect& a, const WpDefect& b) noexcept { return a.rank() < b.rank(); }
  friend bool operator==(const WpDefect& a, const WpDefect& b) noexcept = default;

 private:
  WpDefect(Kind k, int v) : kind_(k), value_(v) {}
  long long rank() const noexcept {
    return kind_ == Kind::Finite ? value_ : (kind_ == Kind::Zero ? 0 : (1LL << 40));
  }
  Kind kind_;
  int value_;
};

std::string to_string(const WpDefect& d);

struct ASGenerator {
  LaurentSeries value;
  bool reduced = false;
  WpDefect df = WpDefect::infinite();
};

LaurentSeries wp(const LaurentSeries& a);

/// Coefficients c_1..c_{p-1} (index 0 unused) of
/// S(X1, X2) = sum_k c_k X1^k X2^(p-k) over F_p.
std::vector<int> witt_S_coefficients(int p);
LaurentSeries witt_S(const LaurentSeries& a, const LaurentSeries& b);

/// Canonical reduction modulo K^wp: every t^(pe), e < 0, is folded to its
/// p-th root, a constant is replaced by the least element of its coset mod
/// wp(F_q), positive exponents are dropped. Throws InsufficientPrecision when
/// no negative term survives and the constant term is unknown.
ASGenerator reduce_K(const LaurentSeries& kappa);

struct BreakInfo {
  enum class Kind { Ramified, Unramified, Trivial };
  Kind kind;
  int b = 0;
};

std::string to_string(const BreakInfo& b);

BreakInfo break_of(const LaurentSeries& kappa);

/// Outcome of the independence test for two generators of a C_p x C_p
/// extension, with the pair put in the order u1 <= u2.
struct IndependentPair {
  bool independent = false;
  ASGenerator beta1;
  ASGenerator beta2;
  /// beta1 came from the second input.
  bool swapped = false;
  /// Equal breaks with cancelling leading terms: beta1 = reduce(kappa2 + a*kappa1).
  bool renormalized = false;
  int renormalize_a = 0;
};

/// Tests the p + 1 lines of the F_p-span of kappa1, kappa2. Both inputs are
/// reduced first.
IndependentPair independent_pair(const LaurentSeries& kappa1, const LaurentSeries& kappa2);

/// As independent_pair but throws DependentGenerators when dependent.
IndependentPair ordered_pair(const LaurentSeries& kappa1, const LaurentSeries& kappa2);

}  // namespace ramify
