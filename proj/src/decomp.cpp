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

#include "ramify/decomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

int mod_p(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

void check_generator(const ASGenerator& g, const char* name) {
  if (!g.reduced) throw PreconditionViolated(std::string(name) + " is not reduced");
  if (!g.df.is_finite()) throw PreconditionViolated(std::string(name) + " has df " + to_string(g.df));
  if (!g.value.is_exact())
    throw InsufficientPrecision(std::string(name) + " is only known to O(t^" +
                                std::to_string(g.value.precision()) + ")");
  const int p = g.value.field().p();
  if (g.df.value() % p == 0)
    throw NonCoprimeValuation(std::string(name) + " has valuation " + std::to_string(g.df.value()) +
                              " divisible by p");
}

std::optional<int> neg_max(std::optional<int> a, int v) {
  if (!a || -v > *a) return -v;
  return a;
}

}  // namespace

DecompData decompose(const ASGenerator& beta1, const ASGenerator& beta2) {
  check_generator(beta1, "beta1");
  check_generator(beta2, "beta2");
  const FieldPtr& fp = beta1.value.field_ptr();
  const Field& F = *fp;
  const int p = F.p();

  DecompData d;
  d.p = p;
  d.u1 = -beta1.df.value();
  d.u2 = -beta2.df.value();
  d.beta1 = beta1.value;
  d.beta2 = beta2.value;
  if (d.u1 > d.u2)
    throw PreconditionViolated("decompose needs u1 <= u2, got " + std::to_string(d.u1) + " > " +
                               std::to_string(d.u2));
  d.mu.assign(p, LaurentSeries(fp));
  d.epsilon = LaurentSeries(fp);

  std::vector<LaurentSeries> beta_pow{LaurentSeries::constant(fp, F.one())};
  for (int i = 1; i < p; ++i) beta_pow.push_back(beta_pow.back() * beta1.value);
  const FqElem lc = beta1.value.leading_coeff();

  LaurentSeries rest = beta2.value;
  while (!rest.is_zero() && rest.terms().front().exp <= 0) {
    const Term lead = rest.terms().front();
    const int n = lead.exp;
    rest -= LaurentSeries::monomial(fp, lead.coeff, n);
    if (n == 0) {
      d.mu[0] = LaurentSeries::constant(fp, F.frobenius_inv(F.wp_coset_min(lead.coeff)));
      continue;
    }
    if (n % p == 0) {
      rest += LaurentSeries::monomial(fp, F.frobenius_inv(lead.coeff), n / p);
      continue;
    }
    int i = 1;
    while (mod_p(n + static_cast<long long>(i) * d.u1, p) != 0) ++i;
    const int m = (n + i * d.u1) / p;
    const FqElem c = F.frobenius_inv(F.div(lead.coeff, F.pow(lc, i)));
    const LaurentSeries piece = LaurentSeries::monomial(fp, c, m);
    d.mu[i] += piece;
    // The leading term of piece^p beta1^i is exactly the term just removed.
    rest -= piece.frobenius() * beta_pow[i] - LaurentSeries::monomial(fp, lead.coeff, n);
  }

  for (int i = 1; i <= p - 2; ++i)
    if (const auto v = d.mu[i].valuation()) d.r = neg_max(d.r, p * *v - i * d.u1);
  if (const auto v = d.mu[p - 1].valuation()) d.s = neg_max(d.s, p * *v - (p - 1) * d.u1);

  const int top = std::max(d.r.value_or(INT32_MIN), d.s.value_or(INT32_MIN));
  if (top != d.u2) throw std::logic_error("decompose: max(r, s) differs from u2");

  const LaurentSeries& last = d.mu[p - 1];
  if (p > 2) {
    const auto v = last.valuation();
    if (v && *v >= 0 && last.coeff(0) == F.neg(F.one())) {
      d.mu_last_is_minus_one = true;
      d.epsilon = last + LaurentSeries::constant(fp, F.one());
      if (const auto ve = d.epsilon.valuation()) {
        d.e = *ve;
        d.t = -(p * *ve - (p - 1) * d.u1);
      }
    }
    return d;
  }

  // p = 2: mu = mu_1.
  const LaurentSeries& mu = last;
  d.m = -mu.valuation().value();
  if (d.m == 0) {
    d.omega = mu.coeff(0);
    d.epsilon = mu - LaurentSeries::constant(fp, d.omega);
    if (const auto ve = d.epsilon.valuation()) {
      if (2 * *ve >= d.u1) {
        d.epsilon = LaurentSeries(fp);
        d.epsilon_truncated = true;
        d.notes.push_back("eps with v(eps) = " + std::to_string(*ve) + " >= u1/2 replaced by 0");
      } else {
        d.e = *ve;
      }
    }
  }
  return d;
}

LaurentSeries recompose(const DecompData& d, const LaurentSeries& beta1) {
  LaurentSeries sum = d.mu[0].frobenius();
  LaurentSeries power = LaurentSeries::constant(beta1.field_ptr(), beta1.field().one());
  for (int i = 1; i < d.p; ++i) {
    power *= beta1;
    sum += d.mu[i].frobenius() * power;
  }
  return sum;
}

Q8Prep q8_prepare(const ASGenerator& kappa1, const ASGenerator& kappa2) {
  const FieldPtr& fp = kappa1.value.field_ptr();
  const Field& F = *fp;
  if (F.p() != 2) throw WrongCharacteristic("quaternion preparation needs p = 2, got p = " + std::to_string(F.p()));
  const DecompData d = decompose(kappa1, kappa2);
  const CpExtension ext = CpExtension::make(kappa1.value);
  const LaurentSeries one = LaurentSeries::constant(fp, F.one());

  Q8Prep q;
  q.m = d.m;
  q.omega = d.omega;
  q.e = d.e;
  q.epsilon = d.epsilon;
  q.epsilon_truncated = d.epsilon_truncated;
  q.mu0 = d.mu[0].is_zero() ? F.zero() : d.mu[0].coeff(0);
  q.mu = d.m == 0 ? LaurentSeries::constant(fp, d.omega) + d.epsilon : d.mu[1];
  q.omega_cubed_is_one = d.m == 0 && F.pow(d.omega, 3) == F.one();

  const LaurentSeries& mu = q.mu;
  const LaurentSeries mu0sq = LaurentSeries::constant(fp, F.mul(q.mu0, q.mu0));
  const LaurentSeries mu2 = mu * mu;
  LaurentSeries a(fp);
  if (d.m > 0) {
    a = (one + mu2 + mu2 * mu) * kappa1.value + mu0sq * (one + mu);
  } else {
    a = (one + mu2 + mu2 * mu2) * kappa1.value + mu0sq * (one + mu + mu2);
  }
  q.s1 = ExtElement::monomial(ext, a, 1);
  q.v_s1 = ext_valuation(ext, q.s1);

  // v_M(k) = 4 v_K(k), v_M(x1) = -2 u1, v_M(X) = -(u1 + 4m).
  const int u1 = d.u1;
  const int vX = -(u1 + 4 * d.m);
  if (d.m > 0) {
    q.s2_x1X = LaurentSeries(fp);
    q.s2_X = mu2 * kappa1.value + mu0sq;
  } else {
    q.s2_x1X = wp(mu);
    q.s2_X = wp(mu) + mu0sq;
  }
  std::optional<int> v2;
  if (const auto v = q.s2_x1X.valuation()) v2 = 4 * *v - 2 * u1 + vX;
  if (const auto v = q.s2_X.valuation()) v2 = std::min(v2.value_or(INT32_MAX), 4 * *v + vX);
  if (!v2) throw std::logic_error("q8_prepare: s2 vanishes");
  q.v_s2 = *v2;
  return q;
}

}  // namespace ramify
