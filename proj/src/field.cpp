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

#include "ramify/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a by monic b over F_p; both low-first.
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - 1LL * c * b[j], p);
  }
  a.resize(std::max(db, 0));
  return a;
}

std::vector<int> prime_factors(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

}  // namespace

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(int p, std::span<const int> modulus) {
  const int f = static_cast<int>(modulus.size()) - 1;
  if (f < 1 || modulus.back() != 1) return false;
  if (f == 1) return true;
  // Try every monic divisor of degree 1..f/2.
  for (int d = 1; d <= f / 2; ++d) {
    long long count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    std::vector<int> cand(d + 1, 0);
    cand[d] = 1;
    for (long long code = 0; code < count; ++code) {
      long long c = code;
      for (int k = 0; k < d; ++k) {
        cand[k] = static_cast<int>(c % p);
        c /= p;
      }
      std::vector<int> a(modulus.begin(), modulus.end());
      auto r = poly_rem(std::move(a), cand, p);
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int f) {
  if (f == 1) return {0, 1};
  long long count = 1;
  for (int k = 0; k < f; ++k) count *= p;
  std::vector<int> m(f + 1, 0);
  m[f] = 1;
  for (long long code = 0; code < count; ++code) {
    long long c = code;
    for (int k = 0; k < f; ++k) {
      m[k] = static_cast<int>(c % p);
      c /= p;
    }
    if (is_irreducible(p, m)) return m;
  }
  throw InvalidField("no irreducible polynomial found");
}

FieldPtr Field::make(int p, int f, std::vector<int> modulus) {
  return make(FieldSpec{p, f, std::move(modulus)});
}

FieldPtr Field::make(const FieldSpec& spec) {
  if (!is_prime(spec.p) || spec.p > kMaxPrime)
    throw InvalidField("characteristic must be a prime in [2, 13], got " + std::to_string(spec.p));
  if (spec.f < 1) throw InvalidField("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int k = 0; k < spec.f; ++k) {
    q *= static_cast<std::uint64_t>(spec.p);
    if (q > kMaxOrder) throw InvalidField("field order exceeds supported maximum");
  }
  std::vector<int> modulus = spec.modulus;
  if (modulus.empty()) {
    modulus = default_modulus(spec.p, spec.f);
  } else {
    if (static_cast<int>(modulus.size()) != spec.f + 1)
      throw InvalidField("modulus must have f+1 coefficients");
    for (int& c : modulus) c = mod(c, spec.p);
    if (modulus.back() != 1) throw InvalidField("modulus must be monic");
    if (!is_irreducible(spec.p, modulus)) throw InvalidField("modulus is reducible over F_p");
  }
  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = spec.p;
  field->f_ = spec.f;
  field->q_ = static_cast<std::uint32_t>(q);
  field->modulus_ = std::move(modulus);
  field->build();
  return field;
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
  std::vector<int> da(f_), db(f_);
  for (int k = 0; k < f_; ++k) {
    da[k] = static_cast<int>(a % p_);
    a /= p_;
    db[k] = static_cast<int>(b % p_);
    b /= p_;
  }
  std::vector<int> prod(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  auto r = poly_rem(std::move(prod), modulus_, p_);
  std::uint32_t code = 0;
  for (int k = f_ - 1; k >= 0; --k) code = code * p_ + static_cast<std::uint32_t>(r[k]);
  return code;
}

void Field::build() {
  pow_p_.assign(f_ + 1, 1);
  for (int k = 1; k <= f_; ++k) pow_p_[k] = pow_p_[k - 1] * p_;

  // g = X mod modulus; for f == 1 this is the root -m_0.
  gen_ = f_ == 1 ? FqElem{static_cast<std::uint32_t>(mod(-modulus_[0], p_))}
                 : FqElem{static_cast<std::uint32_t>(p_)};

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0;
    for (int k = 0; k < f_; ++k) r += static_cast<std::uint32_t>(mod(-coord(FqElem{a}, k), p_)) * pow_p_[k];
    neg_[a] = r;
  }
  if (q_ <= 256) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    add_.shrink_to_fit();
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0;
        for (int k = 0; k < f_; ++k)
          r += static_cast<std::uint32_t>((coord(FqElem{a}, k) + coord(FqElem{b}, k)) % p_) * pow_p_[k];
        add_[a * q_ + b] = r;
      }
  }

  // Find a primitive element, then tabulate exp/log.
  const std::uint32_t n = q_ - 1;
  const auto factors = prime_factors(n);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t prim = 1;
  for (std::uint32_t c = (q_ == 2 ? 1 : 2); c < q_; ++c) {
    bool ok = true;
    for (int r : factors)
      if (slow_pow(c, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      prim = c;
      break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(n));
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k] = x;
    exp_[k + n] = x;
    log_[x] = k;
    x = slow_mul(x, prim);
  }

  frob_.resize(q_);
  frob_inv_.resize(q_);
  wp_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) frob_[a] = pow(FqElem{a}, p_).code;
  for (std::uint32_t a = 0; a < q_; ++a) frob_inv_[frob_[a]] = a;
  for (std::uint32_t a = 0; a < q_; ++a) wp_[a] = sub(FqElem{frob_[a]}, FqElem{a}).code;
  wp_pre_.assign(q_, -1);
  for (std::uint32_t a = q_; a-- > 0;) wp_pre_[wp_[a]] = a;  // keeps the least preimage

  // Least representative of each coset of the additive subgroup wp(F_q).
  std::vector<std::uint32_t> image;
  for (std::uint32_t c = 0; c < q_; ++c)
    if (wp_pre_[c] >= 0) image.push_back(c);
  wp_coset_min_.assign(q_, q_);
  for (std::uint32_t c = 0; c < q_; ++c) {
    if (wp_coset_min_[c] != q_) continue;
    for (std::uint32_t w : image) wp_coset_min_[add(FqElem{c}, FqElem{w}).code] = c;
  }
}

FqElem Field::from_int(long long v) const noexcept { return FqElem{static_cast<std::uint32_t>(mod(v, p_))}; }

FqElem Field::from_code(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("field element code out of range");
  return FqElem{code};
}

FqElem Field::from_coords(std::span<const int> coords) const {
  std::uint32_t r = 0;
  for (int k = 0; k < f_ && k < static_cast<int>(coords.size()); ++k)
    r += static_cast<std::uint32_t>(mod(coords[k], p_)) * pow_p_[k];
  return FqElem{r};
}

int Field::coord(FqElem a, int k) const noexcept { return static_cast<int>((a.code / pow_p_[k]) % p_); }

std::vector<int> Field::coords(FqElem a) const {
  std::vector<int> out(f_);
  for (int k = 0; k < f_; ++k) out[k] = coord(a, k);
  return out;
}

FqElem Field::add(FqElem a, FqElem b) const noexcept {
  if (!add_.empty()) return FqElem{add_[a.code * q_ + b.code]};
  std::uint32_t r = 0;
  for (int k = 0; k < f_; ++k)
    r += static_cast<std::uint32_t>((coord(a, k) + coord(b, k)) % p_) * pow_p_[k];
  return FqElem{r};
}

FqElem Field::sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }

FqElem Field::mul(FqElem a, FqElem b) const noexcept {
  if (a.code == 0 || b.code == 0) return FqElem{0};
  return FqElem{exp_[log_[a.code] + log_[b.code]]};
}

FqElem Field::inv(FqElem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in F_q");
  const std::uint32_t n = q_ - 1;
  return FqElem{exp_[(n - log_[a.code]) % n]};
}

FqElem Field::pow(FqElem a, long long e) const {
  if (a.code == 0) {
    if (e < 0) throw std::domain_error("negative power of zero in F_q");
    return e == 0 ? one() : zero();
  }
  const long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a.code]) * (e % n)) % n;
  if (k < 0) k += n;
  return FqElem{exp_[k]};
}

std::optional<FqElem> Field::wp_solve(FqElem c) const noexcept {
  const auto w = wp_pre_[c.code];
  if (w < 0) return std::nullopt;
  return FqElem{static_cast<std::uint32_t>(w)};
}

std::uint64_t Field::mult_order(FqElem a) const {
  if (a.code == 0) throw std::domain_error("order of zero");
  const std::uint64_t n = q_ - 1;
  std::uint64_t k = log_[a.code];
  std::uint64_t g = n;
  for (std::uint64_t x = k; x;) {
    std::uint64_t t = g % x;
    g = x;
    x = t;
  }
  return n / g;
}

std::string Field::to_string(FqElem a) const {
  if (in_prime_field(a)) return std::to_string(a.code);
  std::string out;
  for (int k = f_ - 1; k >= 0; --k) {
    const int c = coord(a, k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "g";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ramify
