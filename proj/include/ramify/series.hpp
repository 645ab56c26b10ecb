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
 * @file series.hpp
 * @brief Truncated Laurent series over F_q, i.e. elements of K = F_q((t)).
 *
 * A series is a sparse, sorted list of nonzero terms together with an absolute
 * precision N: every term t^e with e >= N is unknown. N == kExact marks a
 * Laurent polynomial known exactly. Arithmetic propagates precision:
 *
 *   prec(a + b) = min(prec a, prec b)
 *   prec(a * b) = min(v(a) + prec b, v(b) + prec a)
 *   prec(a^p)   = p * prec a          (Frobenius is exact in characteristic p)
 *
 * where v of a series with no known terms is taken to be its precision.
 *
 * Text format: terms in increasing exponent joined by " + ", e.g.
 * "t^-5 + 2*t^-1 + 1 + O(t^2)". Coefficients of F_q with f > 1 print as
 * polynomials in g, parenthesized when they have more than one term:
 * "(g + 1)*t^-3 + g*t^-1". The parser accepts any +, -, *, ^ expression in
 * t, g, integers and parentheses, with an optional trailing O(t^N).
 */

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramify/field.hpp"

namespace ramify {

struct Term {
  int exp;
  FqElem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Saturating precision arithmetic; kExact absorbs.
inline constexpr int kExact = std::numeric_limits<int>::max();
constexpr int prec_add(int a, int b) noexcept { return (a == kExact || b == kExact) ? kExact : a + b; }
constexpr int prec_mul(int k, int a) noexcept { return a == kExact ? kExact : k * a; }

class LaurentSeries {
 public:
  /// Placeholder with no field; assign before use.
  LaurentSeries() = default;
  explicit LaurentSeries(FieldPtr field, int prec = kExact);

  static LaurentSeries monomial(FieldPtr field, FqElem c, int exp, int prec = kExact);
  static LaurentSeries constant(FieldPtr field, FqElem c, int prec = kExact);
  /// Sorts, merges duplicate exponents, drops zeros and terms at or above prec.
  static LaurentSeries from_terms(FieldPtr field, std::vector<Term> terms, int prec = kExact);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  int precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ == kExact; }

  /// True when no term is known: the series is zero up to its precision.
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Least known exponent, or nullopt when zero up to precision.
  std::optional<int> valuation() const noexcept;
  /// Throws InsufficientPrecision when the valuation is not determined.
  int valuation_or_throw() const;
  /// A lower bound for the true valuation: v if known, else the precision.
  int valuation_bound() const noexcept { return terms_.empty() ? prec_ : terms_.front().exp; }
  FqElem leading_coeff() const;
  /// Coefficient of t^e; throws InsufficientPrecision if e >= precision.
  FqElem coeff(int e) const;

  LaurentSeries truncated(int prec) const;
  /// Same terms, precision replaced (used when revealing more digits of a polynomial).
  LaurentSeries with_precision(int prec) const;
  /// Terms with exponent < bound, precision min(prec, bound).
  LaurentSeries head(int bound) const { return truncated(bound); }

  LaurentSeries operator-() const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  LaurentSeries scaled(FqElem c) const;
  /// Multiplication by t^k.
  LaurentSeries shifted(int k) const;
  /// a^p, exact in characteristic p.
  LaurentSeries frobenius() const;
  LaurentSeries pow(int n) const;

  /// Structural equality: same terms and same precision.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
  /// Agreement on every exponent known in both.
  bool agrees_with(const LaurentSeries& o) const;

 private:
  FieldPtr field_;
  std::vector<Term> terms_;
  int prec_ = kExact;
};

/// Split a = sum_j c_j^p t^j, j = 0..p-1, c_j with precision ceil((prec - j)/p).
std::vector<LaurentSeries> ls_p_power_split(const LaurentSeries& a);

std::string to_string(const LaurentSeries& a, bool with_precision = true);

/// Parses the text format. Without an explicit O(t^N) the result gets
/// default_prec. Throws ParseError.
LaurentSeries parse_series(const FieldPtr& field, std::string_view text, int default_prec);

}  // namespace ramify
