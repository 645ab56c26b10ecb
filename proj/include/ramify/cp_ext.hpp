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
 * @file cp_ext.hpp
 * @brief A ramified C_p-extension L = K(y), wp(y) = beta, and the brute-force
 * reduction of L-elements modulo wp(L) + K.
 *
 * Elements are y-polynomials of degree < p. The monomial t^m y^i sits at
 * level v_L = p*m - i*b, and since p does not divide b the levels of
 * t^m y^i, 1 <= i < p, run over every integer prime to p exactly once.
 */

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ramify/artin_schreier.hpp"

namespace ramify {

using Rational = boost::rational<long long>;

class CpExtension {
 public:
  /// beta is reduced first; throws PreconditionViolated unless its df is finite.
  static CpExtension make(const LaurentSeries& beta);

  const FieldPtr& field_ptr() const noexcept { return beta_.field_ptr(); }
  const Field& field() const noexcept { return beta_.field(); }
  int p() const noexcept { return beta_.field().p(); }
  const LaurentSeries& beta() const noexcept { return beta_; }
  int b() const noexcept { return b_; }

 private:
  CpExtension(LaurentSeries beta, int b) : beta_(std::move(beta)), b_(b) {}
  LaurentSeries beta_;
  int b_;
};

/// sum_i coeffs[i] y^i, exactly p coefficients.
struct ExtElement {
  std::vector<LaurentSeries> coeffs;

  static ExtElement zero(const CpExtension& ext);
  static ExtElement from_base(const CpExtension& ext, const LaurentSeries& a);
  /// a * y^i.
  static ExtElement monomial(const CpExtension& ext, const LaurentSeries& a, int i);

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement scaled(const LaurentSeries& a) const;
  /// Drops the y^0 part.
  ExtElement without_base() const;
};

ExtElement ext_mul(const CpExtension& ext, const ExtElement& a, const ExtElement& b);

std::string to_string(const ExtElement& e);

/// Level p*exp - i*b of t^exp y^i.
int ext_level(const CpExtension& ext, int exp, int i);

/// v_L, or nullopt for an exact zero. Throws InsufficientPrecision when the
/// minimum is not determined by known terms.
std::optional<int> ext_valuation(const CpExtension& ext, const ExtElement& e);

/// Least level at which some coefficient (i >= 1) has unknown terms.
int ext_level_precision(const CpExtension& ext, const ExtElement& e, bool include_base = false);

enum class HHDirection { Phi, Psi };

/// phi(x) = x for x <= b, b + (x - b)/p above; psi is its inverse.
Rational hasse_herbrand(int p, int b, Rational x, HHDirection dir);
inline Rational hasse_herbrand(const CpExtension& ext, Rational x, HHDirection dir) {
  return hasse_herbrand(ext.p(), ext.b(), x, dir);
}

ExtElement wp_ext(const CpExtension& ext, const ExtElement& e);

/// df_{L/K}: Finite(n) with n < 0, or Infinite.
struct ExtDefect {
  bool finite = false;
  int value = 0;

  static ExtDefect make_finite(int v) { return {true, v}; }
  static ExtDefect make_infinite() { return {false, 0}; }
  friend bool operator==(const ExtDefect&, const ExtDefect&) = default;
};

std::string to_string(const ExtDefect& d);

struct OracleOptions {
  /// Lowest monomial level used for wp-images; 0 picks 2|v_L(e)| + p*b.
  int window = 0;
  /// Automatic doublings on WindowTooSmall.
  int max_doublings = 4;
};

struct OracleResult {
  /// e' = e - wp(l), without its y^0 part.
  ExtElement reduced;
  /// The l with e - e' = wp(l) modulo K.
  ExtElement preimage;
  ExtDefect df;
  /// "wp-image", "residue", "not-congruent", "square-congruent", "exhausted".
  std::string certificate;
  int window = 0;
  int generators = 0;
  int pivots = 0;
};

/// F_p-linear elimination of e against the wp-images of every monomial
/// c t^m y^i (c in an F_p-basis of F_q) with level in [-window, -b].
/// Throws WindowTooSmall, InsufficientPrecision.
OracleResult reduce_LK_oracle(const CpExtension& ext, const ExtElement& e, const OracleOptions& opts = {});

}  // namespace ramify
