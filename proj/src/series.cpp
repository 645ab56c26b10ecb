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

#include "ramify/series.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ramify/errors.hpp"
#include "ramify/kernels.hpp"

namespace ramify {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

void check_same_field(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field()))
    throw std::invalid_argument("series over different fields");
}

}  // namespace

LaurentSeries::LaurentSeries(FieldPtr field, int prec) : field_(std::move(field)), prec_(prec) {}

LaurentSeries LaurentSeries::monomial(FieldPtr field, FqElem c, int exp, int prec) {
  LaurentSeries s(std::move(field), prec);
  if (!c.is_zero() && exp < prec) s.terms_.push_back({exp, c});
  return s;
}

LaurentSeries LaurentSeries::constant(FieldPtr field, FqElem c, int prec) {
  return monomial(std::move(field), c, 0, prec);
}

LaurentSeries LaurentSeries::from_terms(FieldPtr field, std::vector<Term> terms, int prec) {
  LaurentSeries s(std::move(field), prec);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  const Field& F = *s.field_;
  for (const Term& t : terms) {
    if (t.exp >= prec) break;
    if (!s.terms_.empty() && s.terms_.back().exp == t.exp) {
      s.terms_.back().coeff = F.add(s.terms_.back().coeff, t.coeff);
      if (s.terms_.back().coeff.is_zero()) s.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      s.terms_.push_back(t);
    }
  }
  return s;
}

std::optional<int> LaurentSeries::valuation() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

int LaurentSeries::valuation_or_throw() const {
  if (terms_.empty())
    throw InsufficientPrecision("valuation undetermined: series is zero up to O(t^" + std::to_string(prec_) + ")");
  return terms_.front().exp;
}

FqElem LaurentSeries::leading_coeff() const {
  if (terms_.empty()) throw InsufficientPrecision("leading coefficient of a series that is zero up to precision");
  return terms_.front().coeff;
}

FqElem LaurentSeries::coeff(int e) const {
  if (e >= prec_) throw InsufficientPrecision("coefficient of t^" + std::to_string(e) + " beyond precision");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, int x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return field_->zero();
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  LaurentSeries s(field_, std::min(prec, prec_));
  for (const Term& t : terms_) {
    if (t.exp >= s.prec_) break;
    s.terms_.push_back(t);
  }
  return s;
}

LaurentSeries LaurentSeries::with_precision(int prec) const {
  LaurentSeries s = truncated(prec);
  s.prec_ = prec;
  return s;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s(field_, prec_);
  s.terms_.reserve(terms_.size());
  for (const Term& t : terms_) s.terms_.push_back({t.exp, field_->neg(t.coeff)});
  return s;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  check_same_field(*this, o);
  const Field& F = *field_;
  LaurentSeries s(field_, std::min(prec_, o.prec_));
  s.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    Term t;
    if (b == be || (a != ae && a->exp < b->exp)) {
      t = *a++;
    } else if (a == ae || b->exp < a->exp) {
      t = *b++;
    } else {
      t = {a->exp, F.add(a->coeff, b->coeff)};
      ++a;
      ++b;
    }
    if (t.exp >= s.prec_) break;
    if (!t.coeff.is_zero()) s.terms_.push_back(t);
  }
  return s;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  check_same_field(*this, o);
  const Field& F = *field_;
  const int prec = std::min(prec_add(valuation_bound(), o.prec_), prec_add(o.valuation_bound(), prec_));
  LaurentSeries s(field_, prec);
  if (terms_.empty() || o.terms_.empty()) return s;

  const int lo = terms_.front().exp + o.terms_.front().exp;
  const long long hi = static_cast<long long>(terms_.back().exp) + o.terms_.back().exp;
  const long long span = hi - lo + 1;
  const std::size_t na = terms_.size(), nb = o.terms_.size();

  if (span <= 4 * static_cast<long long>(na * nb) + 64) {
    const bool prime = F.order() == static_cast<std::uint32_t>(F.p());
    if (prime && na >= 8 && nb >= 8) {
      // Dense F_p convolution through the dispatched kernel.
      const int la = terms_.back().exp - terms_.front().exp + 1;
      const int lb = o.terms_.back().exp - o.terms_.front().exp + 1;
      std::vector<std::uint8_t> da(la, 0), db(lb, 0);
      for (const Term& t : terms_) da[t.exp - terms_.front().exp] = static_cast<std::uint8_t>(t.coeff.code);
      for (const Term& t : o.terms_) db[t.exp - o.terms_.front().exp] = static_cast<std::uint8_t>(t.coeff.code);
      std::vector<std::uint32_t> acc(la + lb - 1, 0);
      kernels::active().conv_accumulate(acc.data(), da.data(), da.size(), db.data(), db.size());
      const std::uint32_t p = static_cast<std::uint32_t>(F.p());
      for (std::size_t k = 0; k < acc.size(); ++k) {
        const long long e = lo + static_cast<long long>(k);
        if (e >= prec) break;
        const std::uint32_t c = acc[k] % p;
        if (c) s.terms_.push_back({static_cast<int>(e), FqElem{c}});
      }
      return s;
    }
    std::vector<FqElem> acc(static_cast<std::size_t>(span), F.zero());
    for (const Term& x : terms_)
      for (const Term& y : o.terms_) {
        auto& slot = acc[static_cast<std::size_t>(x.exp + y.exp - lo)];
        slot = F.add(slot, F.mul(x.coeff, y.coeff));
      }
    for (std::size_t k = 0; k < acc.size(); ++k) {
      const long long e = lo + static_cast<long long>(k);
      if (e >= prec) break;
      if (!acc[k].is_zero()) s.terms_.push_back({static_cast<int>(e), acc[k]});
    }
    return s;
  }

  std::map<int, FqElem> acc;
  for (const Term& x : terms_)
    for (const Term& y : o.terms_) {
      const int e = x.exp + y.exp;
      if (e >= prec) continue;
      auto [it, fresh] = acc.try_emplace(e, F.zero());
      it->second = F.add(it->second, F.mul(x.coeff, y.coeff));
    }
  for (const auto& [e, c] : acc)
    if (!c.is_zero()) s.terms_.push_back({e, c});
  return s;
}

LaurentSeries LaurentSeries::scaled(FqElem c) const {
  if (c.is_zero()) return LaurentSeries(field_, prec_add(valuation_bound(), 0) == kExact ? kExact : prec_);
  LaurentSeries s(field_, prec_);
  s.terms_.reserve(terms_.size());
  for (const Term& t : terms_) s.terms_.push_back({t.exp, field_->mul(t.coeff, c)});
  return s;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries s(field_, prec_add(prec_, k));
  s.terms_.reserve(terms_.size());
  for (const Term& t : terms_) s.terms_.push_back({t.exp + k, t.coeff});
  return s;
}

LaurentSeries LaurentSeries::frobenius() const {
  const int p = field_->p();
  LaurentSeries s(field_, prec_mul(p, prec_));
  s.terms_.reserve(terms_.size());
  for (const Term& t : terms_) s.terms_.push_back({p * t.exp, field_->frobenius(t.coeff)});
  return s;
}

LaurentSeries LaurentSeries::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a series");
  LaurentSeries result = constant(field_, field_->one());
  LaurentSeries base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.prec_ == b.prec_ && a.terms_ == b.terms_ && a.field() == b.field();
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  const int bound = std::min(prec_, o.prec_);
  return truncated(bound).terms_ == o.truncated(bound).terms_;
}

std::vector<LaurentSeries> ls_p_power_split(const LaurentSeries& a) {
  const Field& F = a.field();
  const int p = F.p();
  std::vector<std::vector<Term>> parts(p);
  for (const Term& t : a.terms()) {
    const int j = ((t.exp % p) + p) % p;
    parts[j].push_back({(t.exp - j) / p, F.frobenius_inv(t.coeff)});
  }
  std::vector<LaurentSeries> out;
  out.reserve(p);
  for (int j = 0; j < p; ++j) {
    const int prec = a.is_exact() ? kExact : ceil_div(a.precision() - j, p);
    out.push_back(LaurentSeries::from_terms(a.field_ptr(), std::move(parts[j]), prec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

std::string to_string(const LaurentSeries& a, bool with_precision) {
  const Field& F = a.field();
  std::string out;
  for (const Term& t : a.terms()) {
    if (!out.empty()) out += " + ";
    std::string c = F.to_string(t.coeff);
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    if (t.exp == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += "t";
    if (t.exp != 1) out += "^" + std::to_string(t.exp);
  }
  if (out.empty()) out = "0";
  if (with_precision && !a.is_exact()) {
    out += " + O(t";
    if (a.precision() != 1) out += "^" + std::to_string(a.precision());
    out += ")";
  }
  return out;
}

namespace {

class SeriesParser {
 public:
  SeriesParser(const FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

  LaurentSeries parse(int default_prec) {
    std::optional<int> big_o;
    LaurentSeries value = LaurentSeries(field_);
    bool first = true;
    for (;;) {
      skip_ws();
      bool negate = false;
      if (!first) {
        if (at_end()) break;
        const char c = text_[pos_];
        if (c != '+' && c != '-') fail("expected '+' or '-'");
        negate = c == '-';
        ++pos_;
        skip_ws();
      } else if (peek() == '-') {
        negate = true;
        ++pos_;
        skip_ws();
      } else if (peek() == '+') {
        ++pos_;
        skip_ws();
      }
      first = false;
      if (peek() == 'O') {
        if (negate || big_o) fail("misplaced O-term");
        big_o = parse_big_o();
        continue;
      }
      if (big_o) fail("O-term must be last");
      LaurentSeries term = parse_product();
      value = negate ? value - term : value + term;
    }
    const int prec = big_o ? *big_o : default_prec;
    return value.with_precision(prec);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse series \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " +
                     why);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long parse_int(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && !at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > (1LL << 40)) fail("integer too large");
    }
    return neg ? -v : v;
  }

  int parse_big_o() {
    expect('O');
    expect('(');
    expect('t');
    long long n = 1;
    if (peek() == '^') {
      ++pos_;
      n = parse_int(true);
    }
    expect(')');
    return static_cast<int>(n);
  }

  LaurentSeries parse_product() {
    LaurentSeries v = parse_power();
    while (peek() == '*') {
      ++pos_;
      v = v * parse_power();
    }
    return v;
  }

  LaurentSeries parse_power() {
    const char c = peek();
    const Field& F = *field_;
    if (c == 't') {
      ++pos_;
      long long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int(true);
      }
      return LaurentSeries::monomial(field_, F.one(), static_cast<int>(e));
    }
    if (c == 'g') {
      ++pos_;
      long long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int(true);
      }
      if (F.generator().is_zero() && e < 0) fail("negative power of g = 0");
      return LaurentSeries::constant(field_, F.pow(F.generator(), e));
    }
    LaurentSeries base(field_);
    if (c == '(') {
      ++pos_;
      const std::size_t start = pos_;
      int depth = 1;
      while (!at_end() && depth) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth) fail("unbalanced parenthesis");
      SeriesParser inner(field_, text_.substr(start, pos_ - 1 - start));
      base = inner.parse(kExact);
      if (!base.is_exact()) fail("O-term inside parentheses");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = LaurentSeries::constant(field_, F.from_int(parse_int(false)));
    } else {
      fail("unexpected character");
    }
    if (peek() == '^') {
      ++pos_;
      const long long e = parse_int(false);
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  const FieldPtr& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentSeries parse_series(const FieldPtr& field, std::string_view text, int default_prec) {
  SeriesParser parser(field, text);
  return parser.parse(default_prec);
}

}  // namespace ramify
