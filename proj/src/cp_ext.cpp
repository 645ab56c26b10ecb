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

#include "ramify/cp_ext.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "ramify/errors.hpp"
#include "ramify/kernels.hpp"

namespace ramify {

namespace {

int floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<int>(q);
}

int mod_p(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

long long binom_mod(int n, int k, int p) {
  long long c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c % p;
}

int clamp_level(long long v) { return v >= INT_MAX ? kExact : static_cast<int>(std::max<long long>(v, INT_MIN)); }

}  // namespace

CpExtension CpExtension::make(const LaurentSeries& beta) {
  ASGenerator g = reduce_K(beta);
  if (!g.df.is_finite())
    throw PreconditionViolated("C_p-extension needs a ramified generator, got df = " + to_string(g.df) +
                               " for " + to_string(beta));
  return CpExtension(std::move(g.value), -g.df.value());
}

// ---------------------------------------------------------------------------
// ExtElement

ExtElement ExtElement::zero(const CpExtension& ext) {
  return ExtElement{std::vector<LaurentSeries>(ext.p(), LaurentSeries(ext.field_ptr()))};
}

ExtElement ExtElement::from_base(const CpExtension& ext, const LaurentSeries& a) { return monomial(ext, a, 0); }

ExtElement ExtElement::monomial(const CpExtension& ext, const LaurentSeries& a, int i) {
  ExtElement e = zero(ext);
  e.coeffs.at(i) = a;
  return e;
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
  ExtElement r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  ExtElement r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

ExtElement ExtElement::operator-() const {
  ExtElement r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

ExtElement ExtElement::scaled(const LaurentSeries& a) const {
  ExtElement r = *this;
  for (auto& c : r.coeffs) c *= a;
  return r;
}

ExtElement ExtElement::without_base() const {
  ExtElement r = *this;
  r.coeffs[0] = LaurentSeries(coeffs[0].field_ptr());
  return r;
}

ExtElement ext_mul(const CpExtension& ext, const ExtElement& a, const ExtElement& b) {
  const int p = ext.p();
  std::vector<LaurentSeries> prod(2 * p - 1, LaurentSeries(ext.field_ptr()));
  for (int i = 0; i < p; ++i) {
    if (a.coeffs[i].is_zero() && a.coeffs[i].is_exact()) continue;
    for (int j = 0; j < p; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  // y^k = y^(k-p+1) + beta y^(k-p) for k >= p.
  for (int k = 2 * p - 2; k >= p; --k) {
    prod[k - p + 1] += prod[k];
    prod[k - p] += prod[k] * ext.beta();
  }
  prod.resize(p);
  return ExtElement{std::move(prod)};
}

std::string to_string(const ExtElement& e) {
  std::string out;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    const LaurentSeries& c = e.coeffs[i];
    if (c.is_zero() && c.is_exact()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += to_string(c);
    } else {
      out += "(" + to_string(c) + ")*y";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

int ext_level(const CpExtension& ext, int exp, int i) { return ext.p() * exp - i * ext.b(); }

int ext_level_precision(const CpExtension& ext, const ExtElement& e, bool include_base) {
  long long lp = LLONG_MAX;
  for (int i = include_base ? 0 : 1; i < ext.p(); ++i) {
    const int prec = e.coeffs[i].precision();
    if (prec == kExact) continue;
    lp = std::min(lp, static_cast<long long>(ext.p()) * prec - static_cast<long long>(i) * ext.b());
  }
  return lp == LLONG_MAX ? kExact : clamp_level(lp);
}

std::optional<int> ext_valuation(const CpExtension& ext, const ExtElement& e) {
  std::optional<int> best;
  for (int i = 0; i < ext.p(); ++i) {
    if (const auto v = e.coeffs[i].valuation()) {
      const int lev = ext_level(ext, *v, i);
      if (!best || lev < *best) best = lev;
    }
  }
  const int bound = ext_level_precision(ext, e, true);
  if (best && *best < bound) return best;
  if (!best && bound == kExact) return std::nullopt;
  throw InsufficientPrecision("v_L undetermined for " + to_string(e));
}

Rational hasse_herbrand(int p, int b, Rational x, HHDirection dir) {
  if (x <= b) return x;
  if (dir == HHDirection::Phi) return Rational(b) + (x - b) / p;
  return Rational(b) + (x - b) * p;
}

ExtElement wp_ext(const CpExtension& ext, const ExtElement& e) {
  const int p = ext.p();
  const Field& F = ext.field();
  std::vector<LaurentSeries> beta_pow{LaurentSeries::constant(ext.field_ptr(), F.one())};
  for (int k = 1; k < p; ++k) beta_pow.push_back(beta_pow.back() * ext.beta());

  ExtElement r = -e;
  for (int i = 0; i < p; ++i) {
    if (e.coeffs[i].is_zero() && e.coeffs[i].is_exact()) continue;
    const LaurentSeries ap = e.coeffs[i].frobenius();
    // a^p (y + beta)^i, no reduction needed since i < p.
    for (int j = 0; j <= i; ++j) {
      const long long c = binom_mod(i, j, p);
      if (c == 0) continue;
      r.coeffs[j] += (ap * beta_pow[i - j]).scaled(F.from_int(c));
    }
  }
  return r;
}

std::string to_string(const ExtDefect& d) { return d.finite ? std::to_string(d.value) : "infinite"; }

// ---------------------------------------------------------------------------
// Elimination oracle

namespace {

struct Monomial {
  int level;
  int exp;
  int i;
  std::uint32_t basis;  // code p^k of g^k
};

class Eliminator {
 public:
  Eliminator(std::size_t ncols, std::size_t ngens, int p)
      : ncols_(ncols), ngens_(ngens), p_(p), k_(kernels::active()), pivot_(ncols, -1) {}

  /// Reduces the leading column of row against stored pivots until it has no
  /// pivot. Returns the leading column, or ncols when the row vanishes.
  std::size_t reduce(std::vector<std::uint8_t>& row, std::vector<std::uint8_t>& combo) const {
    for (;;) {
      const std::size_t c = k_.find_nonzero(row.data(), ncols_);
      if (c == ncols_ || pivot_[c] < 0) return c;
      const auto& [prow, pcombo] = rows_[pivot_[c]];
      const unsigned factor = static_cast<unsigned>(p_ - row[c]);
      k_.axpy_mod_p(row.data() + c, prow.data() + c, ncols_ - c, factor, p_);
      k_.axpy_mod_p(combo.data(), pcombo.data(), ngens_, factor, p_);
    }
  }

  void insert(std::vector<std::uint8_t> row, std::vector<std::uint8_t> combo) {
    const std::size_t c = reduce(row, combo);
    if (c == ncols_) return;
    unsigned inv = 1;
    while ((inv * row[c]) % p_ != 1) ++inv;
    for (auto& x : row) x = static_cast<std::uint8_t>((x * inv) % p_);
    for (auto& x : combo) x = static_cast<std::uint8_t>((x * inv) % p_);
    pivot_[c] = static_cast<int>(rows_.size());
    rows_.emplace_back(std::move(row), std::move(combo));
  }

  int pivots() const { return static_cast<int>(rows_.size()); }

 private:
  std::size_t ncols_, ngens_;
  unsigned p_;
  const kernels::KernelTable& k_;
  std::vector<int> pivot_;
  std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> rows_;
};

OracleResult run_oracle(const CpExtension& ext, const ExtElement& input, int window) {
  const int p = ext.p();
  const int b = ext.b();
  const Field& F = ext.field();
  const int f = F.degree();
  const ExtElement e = input.without_base();
  const int lp = ext_level_precision(ext, e);

  OracleResult res;
  res.window = window;
  res.preimage = ExtElement::zero(ext);

  int lowest = INT_MAX;
  for (int i = 1; i < p; ++i)
    if (const auto v = e.coeffs[i].valuation()) lowest = std::min(lowest, ext_level(ext, *v, i));

  auto infinite = [&] {
    if (lp <= -b) throw InsufficientPrecision("oracle: terms at levels >= " + std::to_string(lp) + " are unknown");
    res.df = ExtDefect::make_infinite();
    res.certificate = "wp-image";
    return res;
  };
  if (lowest > -b) {
    res.reduced = e;
    return infinite();
  }

  // Columns: (level, digit) for levels lowest..-b, lowest level first.
  const std::size_t ncols = static_cast<std::size_t>(-b - lowest + 1) * f;
  auto column = [&](int level, int digit) { return static_cast<std::size_t>(level - lowest) * f + digit; };

  // A monomial at level l < -b has wp-image leading at p*l + (p-1)*b; those
  // leading below the input are of no use.
  const int lo = std::max(-window, -floor_div(-(static_cast<long long>(lowest) - (p - 1) * b), p));
  std::vector<Monomial> gens;
  for (int l = lo; l <= -b; ++l) {
    if (mod_p(l, p) == 0) continue;
    int i = 1;
    while (mod_p(l + static_cast<long long>(i) * b, p) != 0) ++i;
    const int m = (l + i * b) / p;
    std::uint32_t basis = 1;
    for (int k = 0; k < f; ++k, basis *= p) gens.push_back({l, m, i, basis});
  }
  res.generators = static_cast<int>(gens.size());

  auto fill_row = [&](const ExtElement& x, std::vector<std::uint8_t>& row) {
    for (int i = 1; i < p; ++i)
      for (const Term& t : x.coeffs[i].terms()) {
        const int lev = ext_level(ext, t.exp, i);
        if (lev > -b) continue;
        if (lev < lowest) throw std::logic_error("oracle: term below the column range");
        const auto digits = F.coords(t.coeff);
        for (int d = 0; d < f; ++d) row[column(lev, d)] = static_cast<std::uint8_t>(digits[d]);
      }
  };

  Eliminator elim(ncols, gens.size(), p);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Monomial& mono = gens[g];
    const ExtElement image = wp_ext(
        ext, ExtElement::monomial(ext, LaurentSeries::monomial(ext.field_ptr(), FqElem{mono.basis}, mono.exp), mono.i));
    std::vector<std::uint8_t> row(ncols, 0), combo(gens.size(), 0);
    fill_row(image, row);
    combo[g] = 1;
    elim.insert(std::move(row), std::move(combo));
  }
  res.pivots = elim.pivots();

  std::vector<std::uint8_t> row(ncols, 0), combo(gens.size(), 0);
  fill_row(e, row);
  const std::size_t lead = elim.reduce(row, combo);

  // e + sum combo_g wp(mono_g) is the residual, so l = -sum combo_g mono_g.
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!combo[g]) continue;
    const Monomial& mono = gens[g];
    const FqElem c = F.mul(FqElem{mono.basis}, F.from_int(p - combo[g]));
    res.preimage.coeffs[mono.i] += LaurentSeries::monomial(ext.field_ptr(), c, mono.exp);
  }
  res.reduced = (e - wp_ext(ext, res.preimage)).without_base();

  if (lead == ncols) return infinite();
  const int level = lowest + static_cast<int>(lead / f);
  if (level >= lp)
    throw InsufficientPrecision("oracle: residual leading level " + std::to_string(level) +
                                " is not below the known level " + std::to_string(lp));

  res.df = ExtDefect::make_finite(level);
  if (level == -b) {
    const FqElem c = res.reduced.coeffs[1].coeff(0);
    if (F.wp_solve(c)) throw std::logic_error("oracle: residue at -b lies in wp(F_q)");
    res.certificate = "residue";
  } else if (mod_p(level + b, p) != 0) {
    res.certificate = "not-congruent";
  } else if (mod_p(level - static_cast<long long>(p - 1) * b, p * p) == 0) {
    res.certificate = "square-congruent";
  } else {
    const int needed = (level - (p - 1) * b) / p;
    if (needed < -window)
      throw WindowTooSmall("oracle: level " + std::to_string(level) + " needs monomials at level " +
                           std::to_string(needed) + " below window " + std::to_string(window));
    res.certificate = "exhausted";
  }

  const auto check = ext_valuation(ext, res.reduced);
  if (!check || *check != level) throw std::logic_error("oracle: reduced element has the wrong valuation");
  return res;
}

}  // namespace

OracleResult reduce_LK_oracle(const CpExtension& ext, const ExtElement& e, const OracleOptions& opts) {
  int window = opts.window;
  if (window <= 0) {
    int lowest = 0;
    for (int i = 1; i < ext.p(); ++i)
      if (const auto v = e.coeffs[i].valuation()) lowest = std::min(lowest, ext_level(ext, *v, i));
    window = 2 * -lowest + ext.p() * ext.b();
  }
  for (int attempt = 0;; ++attempt) {
    try {
      return run_oracle(ext, e, window);
    } catch (const WindowTooSmall&) {
      if (attempt >= opts.max_doublings) throw;
      window *= 2;
    }
  }
}

}  // namespace ramify
