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

#include "ramify/genlab.hpp"

#include <sstream>
#include <stdexcept>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

long long binom_mod(int n, int k, int p) {
  long long c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c % p;
}

bool is_exact_zero(const LaurentSeries& a) { return a.is_zero() && a.is_exact(); }

/// Reduces a polynomial in one variable of degree <= 2p - 2 with
/// x^p = x + kappa; slot k holds the coefficient of x^k.
void fold_powers(std::vector<LaurentSeries>& v, int p, const LaurentSeries& kappa) {
  for (int k = static_cast<int>(v.size()) - 1; k >= p; --k) {
    if (is_exact_zero(v[k])) continue;
    v[k - p + 1] += v[k];
    v[k - p] += v[k] * kappa;
    v[k] = LaurentSeries(kappa.field_ptr());
  }
  v.resize(p);
}

}  // namespace

SymbolicMElement::SymbolicMElement(LaurentSeries kappa1, LaurentSeries kappa2)
    : p_(kappa1.field().p()), k1_(std::move(kappa1)), k2_(std::move(kappa2)) {
  c_.assign(static_cast<std::size_t>(p_) * p_, LaurentSeries(k1_.field_ptr()));
}

SymbolicMElement SymbolicMElement::constant(const SymbolicMElement& like, const LaurentSeries& a) {
  return monomial(like, a, 0, 0);
}

SymbolicMElement SymbolicMElement::monomial(const SymbolicMElement& like, const LaurentSeries& a, int i, int j) {
  SymbolicMElement e(like.k1_, like.k2_);
  e.coeff(i, j) = a;
  return e;
}

bool SymbolicMElement::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

SymbolicMElement SymbolicMElement::operator+(const SymbolicMElement& o) const {
  SymbolicMElement r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

SymbolicMElement SymbolicMElement::operator-(const SymbolicMElement& o) const {
  SymbolicMElement r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
  return r;
}

SymbolicMElement SymbolicMElement::operator-() const {
  SymbolicMElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

SymbolicMElement SymbolicMElement::scaled(const LaurentSeries& a) const {
  SymbolicMElement r = *this;
  for (auto& c : r.c_) c *= a;
  return r;
}

SymbolicMElement SymbolicMElement::operator*(const SymbolicMElement& o) const {
  const int p = p_;
  const int n = 2 * p - 1;
  const LaurentSeries zero(k1_.field_ptr());
  // Full product on a (2p-1) x (2p-1) grid, then fold x1 and x2.
  std::vector<std::vector<LaurentSeries>> grid(n, std::vector<LaurentSeries>(n, zero));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const LaurentSeries& a = coeff(i, j);
      if (is_exact_zero(a)) continue;
      for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l) {
          const LaurentSeries& b = o.coeff(k, l);
          if (is_exact_zero(b)) continue;
          grid[i + k][j + l] += a * b;
        }
    }
  for (auto& row : grid) fold_powers(row, p, k2_);
  SymbolicMElement r(k1_, k2_);
  for (int j = 0; j < p; ++j) {
    std::vector<LaurentSeries> col(n, zero);
    for (int i = 0; i < n; ++i) col[i] = grid[i][j];
    fold_powers(col, p, k1_);
    for (int i = 0; i < p; ++i) r.coeff(i, j) = col[i];
  }
  return r;
}

bool operator==(const SymbolicMElement& a, const SymbolicMElement& b) {
  if (a.p_ != b.p_) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k)
    if (!(a.c_[k] - b.c_[k]).is_zero()) return false;
  return true;
}

std::string to_string(const SymbolicMElement& e) {
  std::string out;
  for (int i = 0; i < e.p(); ++i)
    for (int j = 0; j < e.p(); ++j) {
      const LaurentSeries& c = e.coeff(i, j);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string mono;
      if (i > 0) mono += i == 1 ? "x1" : "x1^" + std::to_string(i);
      if (j > 0) mono += std::string(mono.empty() ? "" : "*") + (j == 1 ? "x2" : "x2^" + std::to_string(j));
      const std::string cs = to_string(c, false);
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else if (cs.find(' ') != std::string::npos) {
        out += "(" + cs + ")*" + mono;
      } else {
        out += cs + "*" + mono;
      }
    }
  return out.empty() ? "0" : out;
}

SymbolicMElement wp_M(const SymbolicMElement& e) {
  const int p = e.p();
  const Field& F = e.kappa1().field();
  const FieldPtr fp = e.kappa1().field_ptr();
  // (x_k + kappa_k)^i expanded, i < p.
  auto shifted_powers = [&](const LaurentSeries& kappa) {
    std::vector<std::vector<LaurentSeries>> pw(p);
    std::vector<LaurentSeries> kp{LaurentSeries::constant(fp, F.one())};
    for (int k = 1; k < p; ++k) kp.push_back(kp.back() * kappa);
    for (int i = 0; i < p; ++i) {
      pw[i].assign(p, LaurentSeries(fp));
      for (int a = 0; a <= i; ++a) pw[i][a] = kp[i - a].scaled(F.from_int(binom_mod(i, a, p)));
    }
    return pw;
  };
  const auto P1 = shifted_powers(e.kappa1());
  const auto P2 = shifted_powers(e.kappa2());

  SymbolicMElement r = -e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const LaurentSeries& c = e.coeff(i, j);
      if (c.is_zero()) continue;
      const LaurentSeries cp = c.frobenius();
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) r.coeff(a, b) += cp * P1[i][a] * P2[j][b];
    }
  return r;
}

SymbolicMElement galois_action(const SymbolicMElement& e, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("galois_action: sigma index must be 1 or 2");
  const int p = e.p();
  const Field& F = e.kappa1().field();
  SymbolicMElement r = -e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const LaurentSeries& c = e.coeff(i, j);
      if (c.is_zero()) continue;
      const int deg = which == 1 ? i : j;
      for (int a = 0; a <= deg; ++a) {
        const LaurentSeries term = c.scaled(F.from_int(binom_mod(deg, a, p)));
        if (which == 1) {
          r.coeff(a, j) += term;
        } else {
          r.coeff(i, a) += term;
        }
      }
    }
  return r;
}

SymbolicMElement witt_S_M(const SymbolicMElement& a, const SymbolicMElement& b) {
  const int p = a.p();
  const Field& F = a.kappa1().field();
  const auto c = witt_S_coefficients(p);
  const LaurentSeries one = LaurentSeries::constant(a.kappa1().field_ptr(), F.one());
  std::vector<SymbolicMElement> apow{SymbolicMElement::constant(a, one)}, bpow{SymbolicMElement::constant(a, one)};
  for (int k = 1; k < p; ++k) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  SymbolicMElement sum(a.kappa1(), a.kappa2());
  for (int k = 1; k < p; ++k) {
    if (c[k] == 0) continue;
    sum = sum + (apow[k] * bpow[p - k]).scaled(LaurentSeries::constant(a.kappa1().field_ptr(), F.from_int(c[k])));
  }
  return sum;
}

GeneratorData build_generators(GroupKind g, const LaurentSeries& kappa1, const LaurentSeries& kappa2,
                               const LaurentSeries& kappa3) {
  const FieldPtr fp = kappa1.field_ptr();
  const Field& F = *fp;
  check_group(g, F.p());
  if (!independent_pair(kappa1, kappa2).independent)
    throw DependentGenerators("kappa1 = " + to_string(kappa1) + " and kappa2 = " + to_string(kappa2) +
                              " are not independent modulo K^wp");
  const ASGenerator k1 = reduce_K(kappa1), k2 = reduce_K(kappa2), k3 = reduce_K(kappa3);

  const SymbolicMElement zero(k1.value, k2.value);
  const LaurentSeries one = LaurentSeries::constant(fp, F.one());
  const SymbolicMElement x1 = SymbolicMElement::monomial(zero, one, 1, 0);
  const SymbolicMElement x2 = SymbolicMElement::monomial(zero, one, 0, 1);
  const SymbolicMElement c1 = SymbolicMElement::constant(zero, k1.value);
  const SymbolicMElement c2 = SymbolicMElement::constant(zero, k2.value);
  const SymbolicMElement unit = SymbolicMElement::constant(zero, one);

  SymbolicMElement s = -(c2 * x1);
  SymbolicMElement a1 = -x2;
  SymbolicMElement a2 = zero;
  switch (g) {
    case GroupKind::Q8:
      s = s + c1 * x1 + c2 * x2;
      a1 = a1 + x1;
      a2 = x2;
      break;
    case GroupKind::D8:
      s = s + c1 * x1;
      a1 = a1 + x1;
      break;
    case GroupKind::Heis:
      break;
    case GroupKind::Mod:
      s = s + witt_S_M(x1, c1);
      a1 = a1 + witt_S_M(x1, unit);
      break;
  }

  return GeneratorData{g,
                       {k1, k2, k3},
                       s,
                       {{{unit, zero, a1}, {zero, unit, a2}}}};
}

GaloisCheck verify_galois(const GeneratorData& gd) {
  GaloisCheck out;
  const SymbolicMElement rhs_base = gd.s_term + SymbolicMElement::constant(gd.s_term, gd.kappa[2].value);
  for (int i = 1; i <= 2; ++i) {
    const SymbolicMElement lhs = galois_action(rhs_base, i);
    const SymbolicMElement& preimage = gd.action[i - 1][2];
    const SymbolicMElement diff = lhs - wp_M(preimage);
    if (!diff.is_zero()) {
      out.ok = false;
      out.failing = i;
      out.witness = to_string(preimage);
      out.difference = diff;
      return out;
    }
    if (!out.witness.empty()) out.witness += "; ";
    out.witness += "sigma" + std::to_string(i) + ": wp(" + to_string(preimage) + ")";
  }
  out.ok = true;
  return out;
}

SymbolicMElement commutator_on_x3(const GeneratorData& gd) {
  return galois_action(gd.action[1][2], 1) - galois_action(gd.action[0][2], 2);
}

bool verify_witt_identities(const LaurentSeries& kappa1) {
  const FieldPtr fp = kappa1.field_ptr();
  const Field& F = *fp;
  const int p = F.p();
  const SymbolicMElement zero(kappa1, LaurentSeries(fp));
  const LaurentSeries one = LaurentSeries::constant(fp, F.one());
  const SymbolicMElement unit = SymbolicMElement::constant(zero, one);
  const SymbolicMElement x1 = SymbolicMElement::monomial(zero, one, 1, 0);

  SymbolicMElement trace = zero;
  for (int j = 0; j < p; ++j) {
    const SymbolicMElement shifted = x1 + SymbolicMElement::constant(zero, LaurentSeries::constant(fp, F.from_int(j)));
    trace = trace + witt_S_M(shifted, unit);
  }
  if (!(trace == unit)) return false;

  const SymbolicMElement lhs = galois_action(witt_S_M(x1, SymbolicMElement::constant(zero, kappa1)), 1);
  return lhs == wp_M(witt_S_M(x1, unit));
}

std::string pretty(const GeneratorData& gd) {
  std::ostringstream os;
  os << "group " << to_string(gd.group) << " over F_" << gd.s_term.kappa1().field().order() << "\n";
  for (int k = 0; k < 3; ++k)
    os << "  wp(x" << k + 1 << ") = " << (k < 2 ? to_string(gd.kappa[k].value) : "s(x1, x2) + kappa3") << "\n";
  os << "  s(x1, x2) = " << to_string(gd.s_term) << "\n";
  os << "  kappa3 = " << to_string(gd.kappa[2].value) << "\n";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      os << "  (sigma" << i + 1 << " - 1) x" << j + 1 << " = " << to_string(gd.action[i][j]) << "\n";
  return os.str();
}

nlohmann::json to_json(const GeneratorData& gd) {
  nlohmann::json j;
  j["group"] = to_string(gd.group);
  j["kappa"] = nlohmann::json::array();
  for (const auto& k : gd.kappa) j["kappa"].push_back(to_string(k.value, false));
  j["s_term"] = to_string(gd.s_term);
  nlohmann::json action = nlohmann::json::object();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 3; ++k)
      action["sigma" + std::to_string(i + 1)]["x" + std::to_string(k + 1)] = to_string(gd.action[i][k]);
  j["action"] = action;
  return j;
}

}  // namespace ramify
