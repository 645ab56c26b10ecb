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
 * @file genlab.hpp
 * @brief Artin-Schreier generators x1, x2, x3 of a degree-p^3 extension and
 * the action of sigma_1, sigma_2 on them.
 *
 * Elements of M = K(x1, x2) are polynomials in x1, x2 of degree < p in each
 * variable, kept in that form by rewriting x_k^p = x_k + kappa_k. x3 itself
 * is never built; only wp(x3) = s(x1, x2) + kappa3 and (sigma_i - 1) x3.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ramify/classify.hpp"

namespace ramify {

class SymbolicMElement {
 public:
  SymbolicMElement(LaurentSeries kappa1, LaurentSeries kappa2);

  static SymbolicMElement constant(const SymbolicMElement& like, const LaurentSeries& a);
  /// x1^i x2^j with coefficient a.
  static SymbolicMElement monomial(const SymbolicMElement& like, const LaurentSeries& a, int i, int j);

  int p() const noexcept { return p_; }
  const LaurentSeries& kappa1() const noexcept { return k1_; }
  const LaurentSeries& kappa2() const noexcept { return k2_; }
  const LaurentSeries& coeff(int i, int j) const { return c_.at(i * p_ + j); }
  LaurentSeries& coeff(int i, int j) { return c_.at(i * p_ + j); }
  bool is_zero() const;

  SymbolicMElement operator+(const SymbolicMElement& o) const;
  SymbolicMElement operator-(const SymbolicMElement& o) const;
  SymbolicMElement operator-() const;
  SymbolicMElement operator*(const SymbolicMElement& o) const;
  SymbolicMElement scaled(const LaurentSeries& a) const;

  friend bool operator==(const SymbolicMElement& a, const SymbolicMElement& b);

 private:
  int p_;
  LaurentSeries k1_, k2_;
  std::vector<LaurentSeries> c_;
};

std::string to_string(const SymbolicMElement& e);

/// e^p - e, using (x_k^i)^p = (x_k + kappa_k)^i.
SymbolicMElement wp_M(const SymbolicMElement& e);
/// (sigma_i - 1) e, sigma_i: x_i -> x_i + 1.
SymbolicMElement galois_action(const SymbolicMElement& e, int i);
/// S(a, b) evaluated in M.
SymbolicMElement witt_S_M(const SymbolicMElement& a, const SymbolicMElement& b);

struct GeneratorData {
  GroupKind group;
  std::array<ASGenerator, 3> kappa;
  SymbolicMElement s_term;
  /// action[i-1][j-1] = (sigma_i - 1) x_j.
  std::array<std::array<SymbolicMElement, 3>, 2> action;
};

/// Throws DependentGenerators, WrongCharacteristic. kappa1, kappa2, kappa3
/// are replaced by their reduced representatives.
GeneratorData build_generators(GroupKind g, const LaurentSeries& kappa1, const LaurentSeries& kappa2,
                               const LaurentSeries& kappa3);

struct GaloisCheck {
  bool ok = false;
  /// Index i of the failing sigma_i, 0 when ok.
  int failing = 0;
  std::string witness;
  std::optional<SymbolicMElement> difference;
};

/// (sigma_i - 1)(s + kappa3) == wp((sigma_i - 1) x3) for i = 1, 2.
GaloisCheck verify_galois(const GeneratorData& gd);

/// (sigma_1 sigma_2 - sigma_2 sigma_1) x3, which the presentation requires
/// to be 1.
SymbolicMElement commutator_on_x3(const GeneratorData& gd);

/// Tr S(x1, 1) = 1 and (sigma_1 - 1) S(x1, kappa1) = wp(S(x1, 1)) in K(x1).
bool verify_witt_identities(const LaurentSeries& kappa1);

std::string pretty(const GeneratorData& gd);
nlohmann::json to_json(const GeneratorData& gd);

}  // namespace ramify
