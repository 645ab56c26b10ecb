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
 * @file field.hpp
 * @brief Finite fields F_q, q = p^f, with p a small prime.
 *
 * An element is stored as an integer code c = a_0 + a_1 p + ... + a_{f-1} p^{f-1}
 * where a_k is the coordinate of g^k and g is the class of X in F_p[X]/(modulus).
 * Codes 0..p-1 are exactly the prime field. Multiplication goes through
 * discrete log tables; addition is digit-wise (tabulated for q <= 256).
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramify {

/// An element of F_q. Only meaningful together with the Field that made it.
struct FqElem {
  std::uint32_t code = 0;

  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

/// Characteristic, degree and defining polynomial of F_q.
struct FieldSpec {
  int p = 2;
  int f = 1;
  /// Monic modulus, low coefficient first, size f+1. Empty means "pick the
  /// lexicographically first irreducible polynomial".
  std::vector<int> modulus;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr int kMaxPrime = 13;
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// Validates the description (p prime in [2, 13], modulus irreducible) and builds
  /// the lookup tables. Throws InvalidField.
  static FieldPtr make(const FieldSpec& spec);
  static FieldPtr make(int p, int f = 1, std::vector<int> modulus = {});

  int p() const noexcept { return p_; }
  int degree() const noexcept { return f_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  FieldSpec spec() const { return FieldSpec{p_, f_, modulus_}; }

  FqElem zero() const noexcept { return FqElem{0}; }
  FqElem one() const noexcept { return FqElem{1}; }
  /// The class g of X, a root of the modulus.
  FqElem generator() const noexcept { return gen_; }
  FqElem from_int(long long v) const noexcept;
  FqElem from_code(std::uint32_t code) const;
  FqElem from_coords(std::span<const int> coords) const;
  std::vector<int> coords(FqElem a) const;
  int coord(FqElem a, int k) const noexcept;
  bool in_prime_field(FqElem a) const noexcept { return a.code < static_cast<std::uint32_t>(p_); }

  FqElem add(FqElem a, FqElem b) const noexcept;
  FqElem sub(FqElem a, FqElem b) const noexcept;
  FqElem neg(FqElem a) const noexcept { return FqElem{neg_[a.code]}; }
  FqElem mul(FqElem a, FqElem b) const noexcept;
  /// Throws std::domain_error on zero.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, long long e) const;
  FqElem scale(FqElem a, long long k) const noexcept { return mul(a, from_int(k)); }

  FqElem frobenius(FqElem a) const noexcept { return FqElem{frob_[a.code]}; }
  /// The unique d with d^p = a.
  FqElem frobenius_inv(FqElem a) const noexcept { return FqElem{frob_inv_[a.code]}; }
  /// a^p - a.
  FqElem wp(FqElem a) const noexcept { return FqElem{wp_[a.code]}; }
  /// Least (by code) w with w^p - w = c, if any.
  std::optional<FqElem> wp_solve(FqElem c) const noexcept;
  /// Least element of the coset c + wp(F_q).
  FqElem wp_coset_min(FqElem c) const noexcept { return FqElem{wp_coset_min_[c.code]}; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(FqElem a) const;

  /// Polynomial in g, descending powers: "g^2 + 2*g + 1"; prime field elements
  /// print as plain integers.
  std::string to_string(FqElem a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.f_ == b.f_ && a.modulus_ == b.modulus_;
  }

 private:
  Field() = default;
  void build();
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  int p_ = 2;
  int f_ = 1;
  std::uint32_t q_ = 2;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^k for k <= f
  FqElem gen_{};

  std::vector<std::uint32_t> exp_;  // size 2(q-1)
  std::vector<std::uint32_t> log_;  // size q, log_[0] unused
  std::vector<std::uint32_t> add_;  // q*q when q <= 256, else empty
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> frob_;
  std::vector<std::uint32_t> frob_inv_;
  std::vector<std::uint32_t> wp_;
  std::vector<std::int64_t> wp_pre_;  // least preimage under wp, or -1
  std::vector<std::uint32_t> wp_coset_min_;
};

/// True iff n is prime (n small).
bool is_prime(int n) noexcept;

/// Monic modulus of degree f over F_p is irreducible (brute-force factor search).
bool is_irreducible(int p, std::span<const int> modulus);

/// Lexicographically first monic irreducible polynomial of degree f over F_p.
std::vector<int> default_modulus(int p, int f);

}  // namespace ramify
