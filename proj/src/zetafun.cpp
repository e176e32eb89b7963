// Copyright 2026 The dzeta authors
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

#include "dzeta/zetafun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "dzeta/combinatorics.hpp"

namespace dzeta {
namespace zetafun {

namespace {

// Euler-Maclaurin tail of sum_{k>=0} f(u0 + k) for f(x) = x^(-s) (a + b log x):
//
//   T = I(u0) + f(u0)/2 - sum_{j=1..K} B_{2j}/(2j)! f^{(2j-1)}(u0) + R_K,
//   I(u0) = u0^(1-s) [ (a + b log u0)/(s-1) + b/(s-1)^2 ],
//   |R_K| <= 4 (2pi)^(-2K) * integral of |f^{(2K)}| over [u0, inf).
//
// Derivatives follow the closed recurrence
//   f^{(r)}(x) = x^(-s-r) (P_r + Q_r log x),
//   P_{r+1} = -(s+r) P_r + Q_r,   Q_{r+1} = -(s+r) Q_r.
//
// Requires s > 1 and u0 > 1. K grows until the remainder bound drops below
// eps; if the corrections start diverging first the caller must raise u0.
struct EmTail {
  Real value;
  bool ok = false;
  explicit EmTail(mpfr_prec_t p) : value(p) {}
};

EmTail em_tail(const Real& u0, const Real& s, const Real& a, const Real& b,
               mpfr_prec_t p, const Real& eps) {
  EmTail out(p);
  Real one = Real::from_si(1, p);
  Real sm1 = sub(s, one);
  Real logu = log_ball(u0);
  Real u_pow = pow_ball(u0, neg(sm1));  // u0^(1-s)
  Real integral =
      mul(u_pow, add(div(add(a, mul(b, logu)), sm1), div(b, mul(sm1, sm1))));
  Real f0 = mul(pow_ball(u0, neg(s)), add(a, mul(b, logu)));
  Real acc = add(integral, mul_2exp(f0, -1));

  Real P = a, Q = b;
  Real inv_u = div(one, u0);
  Real u_negs = pow_ball(u0, neg(s));  // running x^(-s-r) at x = u0
  Real fact(p);                        // (2j)! tracked incrementally
  Real two_pi = mul_2exp(Real::pi(p), 1);
  Real two_pi_sq_inv = div(one, mul(two_pi, two_pi));
  Real rem_scale = Real::from_si(4, p);  // 4 (2pi)^(-2K), updated per j

  long r = 0;
  Real prev_term_mag(p);
  bool have_prev = false;
  for (long j = 1; j <= 4096; ++j) {
    // advance derivative recurrence to order 2j-1
    while (r < 2 * j - 1) {
      Real sr = add(s, Real::from_si(r, p));
      Real Pn = add(neg(mul(sr, P)), Q);
      Real Qn = neg(mul(sr, Q));
      P = Pn;
      Q = Qn;
      ++r;
      u_negs = mul(u_negs, inv_u);
    }
    Real deriv = mul(u_negs, add(P, mul(Q, logu)));  // f^{(2j-1)}(u0)
    Rat b2j = combinatorics::bernoulli(2 * j);
    Rat w = b2j / Rat(factorial(2 * j));
    Real term = mul(rat_to_real(w, p), deriv);
    acc = sub(acc, term);

    // remainder bound through the 2j-th derivative
    Real sr = add(s, Real::from_si(r, p));
    Real P2 = add(neg(mul(sr, P)), Q);
    Real Q2 = neg(mul(sr, Q));
    Real u_negs2 = mul(u_negs, inv_u);
    Real s2jm1 = add(s, Real::from_si(2 * j - 1, p));
    Real int_abs = mul(mul(u_negs2, u0),
                       add(div(add(abs_ball(P2), mul(abs_ball(Q2), logu)), s2jm1),
                           div(abs_ball(Q2), mul(s2jm1, s2jm1))));
    rem_scale = mul(rem_scale, two_pi_sq_inv);
    Real rem = mul(rem_scale, int_abs).abs_upper();
    if (mpfr_cmp(rem.mid(), eps.mid()) <= 0) {
      out.value = acc;
      out.value.grow_radius(rem);
      out.ok = true;
      return out;
    }
    // stop if the correction terms started growing: asymptotic divergence
    Real mag = term.abs_upper();
    if (have_prev && mpfr_cmp(mag.mid(), prev_term_mag.mid()) > 0 && j > 4) {
      out.ok = false;
      return out;
    }
    prev_term_mag = mag;
    have_prev = true;
  }
  out.ok = false;
  return out;
}

// sum_{k=0}^{inf} (k + start)^(-s) (a + b log(k + start)) with start > 1,
// direct terms plus an Euler-Maclaurin tail; N adapts upward on failure.
Real em_sum(const Real& start, const Real& s, const Real& a, const Real& b,
            const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.prec_bits();
  Real eps = Real::ten_pow(-(ctx.working_digits() + 2), 64);
  long n_direct = std::max<long>(8, ctx.working_digits());
  Real partial = Real::zero(p);
  long k = 0;
  while (true) {
    for (; k < n_direct; ++k) {
      Real x = add(start, Real::from_si(k, p));
      Real term = mul(pow_ball(x, neg(s)), add(a, mul(b, log_ball(x))));
      partial = add(partial, term);
    }
    Real u0 = add(start, Real::from_si(n_direct, p));
    EmTail tail = em_tail(u0, s, a, b, p, eps);
    if (tail.ok) return add(partial, tail.value);
    if (n_direct > 4'000'000)
      throw ConvergenceError("Euler-Maclaurin tail failed to converge");
    n_direct *= 2;
  }
}

struct IntKey {
  long s;
  mpfr_prec_t prec;
  auto operator<=>(const IntKey&) const = default;
};

std::mutex g_zeta_mutex;
std::map<IntKey, Real>& zeta_m1_cache() {
  static std::map<IntKey, Real> cache;
  return cache;
}
std::map<IntKey, Real>& zeta_prime_cache() {
  static std::map<IntKey, Real> cache;
  return cache;
}

}  // namespace

Real zeta_minus_one(const Real& s, const PrecisionContext& ctx) {
  if (!definitely_greater(s, Real::from_si(1, 64)))
    throw DomainError("zeta requires s > 1 (direct-domain scope)");
  mpfr_prec_t p = ctx.prec_bits();
  // zeta(s) - 1 = sum_{k>=2} k^(-s) = hurwitz(s, 2)
  return em_sum(Real::from_si(2, p), s, Real::from_si(1, p), Real::zero(p), ctx);
}

Real zeta_minus_one(long s, const PrecisionContext& ctx) {
  if (s <= 1) throw DomainError("zeta requires s > 1 (direct-domain scope)");
  mpfr_prec_t p = ctx.prec_bits();
  IntKey key{s, p};
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto it = zeta_m1_cache().find(key);
    if (it != zeta_m1_cache().end()) return it->second;
  }
  Real v = zeta_minus_one(Real::from_si(s, p), ctx);
  std::lock_guard<std::mutex> lock(g_zeta_mutex);
  zeta_m1_cache().emplace(key, v);
  return v;
}

Real zeta(const Real& s, const PrecisionContext& ctx) {
  return add_si(zeta_minus_one(s, ctx), 1);
}

Real zeta(long s, const PrecisionContext& ctx) {
  return add_si(zeta_minus_one(s, ctx), 1);
}

Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx) {
  if (!definitely_greater(s, Real::from_si(1, 64)))
    throw DomainError("hurwitz_zeta requires s > 1");
  if (!a.is_positive()) throw DomainError("hurwitz_zeta requires a > 0");
  mpfr_prec_t p = ctx.prec_bits();
  // Shift the start above 1 so the tail machinery has log x > 0 throughout.
  Real sum = Real::zero(p);
  Real start = a;
  long shift = 0;
  while (!definitely_greater(start, Real::from_si(1, p))) {
    sum = add(sum, pow_ball(start, neg(s)));
    start = add_si(start, 1);
    ++shift;
    if (shift > 64) throw DomainError("hurwitz_zeta: shift failed");
  }
  return add(sum, em_sum(start, s, Real::from_si(1, p), Real::zero(p), ctx));
}

Real zeta_prime(const Real& s, const PrecisionContext& ctx) {
  if (!definitely_greater(s, Real::from_si(1, 64)))
    throw DomainError("zeta_prime requires s > 1");
  mpfr_prec_t p = ctx.prec_bits();
  // zeta'(s) = -sum_{k>=2} log k * k^(-s)
  return neg(
      em_sum(Real::from_si(2, p), s, Real::zero(p), Real::from_si(1, p), ctx));
}

Real zeta_prime(long s, const PrecisionContext& ctx) {
  if (s <= 1) throw DomainError("zeta_prime requires s > 1");
  mpfr_prec_t p = ctx.prec_bits();
  IntKey key{s, p};
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto it = zeta_prime_cache().find(key);
    if (it != zeta_prime_cache().end()) return it->second;
  }
  Real v = zeta_prime(Real::from_si(s, p), ctx);
  std::lock_guard<std::mutex> lock(g_zeta_mutex);
  zeta_prime_cache().emplace(key, v);
  return v;
}

namespace {

// Threshold index past which successive term magnitudes |z|^k k^q (or the
// shifted variant) contract by at least rho = (1+|z|)/2: beyond it the tail
// is below |term_k| * rho/(1-rho).
struct TermRatioTail {
  long start_index;
  double rho;
  double inv_gap;  // rho/(1-rho)

  TermRatioTail(double absz, long q) {
    rho = (1.0 + absz) / 2.0;
    double need = q > 0 ? q / std::log((1.0 + absz) / (2.0 * absz)) : 0.0;
    start_index = std::max<long>(2, static_cast<long>(need) + 1);
    inv_gap = rho / (1.0 - rho);
  }

  // Rigorous bound from the current term ball.
  Real bound(const Real& term) const {
    Real t = term.abs_upper();
    return mul(t, Real::from_double(inv_gap * 1.0000001, 64)).abs_upper();
  }
};

}  // namespace

Real polylog(long s, const Real& z, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.prec_bits();
  Real absz = abs_ball(z).abs_upper();
  if (!definitely_less(absz, Real::from_si(1, p)))
    throw DomainError("polylog requires |z| < 1");
  if (mpfr_zero_p(z.mid()) && z.rad_is_zero()) return Real::zero(p);
  long q = s < 0 ? -s : 0;
  TermRatioTail tail(absz.to_double(), q);
  double eps_d = std::pow(10.0, -ctx.working_digits());
  Real eps = Real::ten_pow(-ctx.working_digits(), 64);
  Real sum = Real::zero(p);
  Real zk = Real::from_si(1, p);
  for (long k = 1; k <= ctx.max_terms; ++k) {
    zk = mul(zk, z);
    Real term = s >= 0 ? div(zk, pow_si(Real::from_si(k, p), s))
                       : mul(zk, pow_si(Real::from_si(k, p), -s));
    sum = add(sum, term);
    if (k >= tail.start_index &&
        term.abs_upper().to_double() * tail.inv_gap <= eps_d) {
      Real tb = tail.bound(term);
      if (mpfr_cmp(tb.mid(), eps.mid()) <= 0) {
        sum.grow_radius(tb);
        return sum;
      }
    }
  }
  throw ConvergenceError("polylog did not converge within max_terms");
}

Real lerch(const Real& z, const Real& s, const Real& lam,
           const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.prec_bits();
  if (!lam.is_positive())
    throw DomainError("lerch requires lam > 0 in this artifact");
  Real absz = abs_ball(z).abs_upper();
  if (!definitely_less(absz, Real::from_si(1, p)))
    throw DomainError("lerch requires |z| < 1");
  Real eps = Real::ten_pow(-ctx.working_digits(), 64);
  double eps_d = std::pow(10.0, -ctx.working_digits());
  double sd = s.to_double();
  long q = sd < 0 ? static_cast<long>(-std::floor(sd)) + 1 : 0;
  TermRatioTail tail(absz.to_double(), q);
  Real sum = pow_ball(lam, neg(s));  // m = 0 term
  Real zm = Real::from_si(1, p);
  if (mpfr_zero_p(z.mid()) && z.rad_is_zero()) return sum;
  for (long m = 1; m <= ctx.max_terms; ++m) {
    zm = mul(zm, z);
    Real term = mul(zm, pow_ball(add(lam, Real::from_si(m, p)), neg(s)));
    sum = add(sum, term);
    if (m >= tail.start_index &&
        term.abs_upper().to_double() * tail.inv_gap <= eps_d) {
      Real tb = tail.bound(term);
      if (mpfr_cmp(tb.mid(), eps.mid()) <= 0) {
        sum.grow_radius(tb);
        return sum;
      }
    }
  }
  throw ConvergenceError("lerch did not converge within max_terms");
}

Complex lerch(const Real& z, const Complex& s, const Real& lam,
              const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.prec_bits();
  if (!lam.is_positive())
    throw DomainError("lerch requires lam > 0 in this artifact");
  Real absz = abs_ball(z).abs_upper();
  if (!definitely_less(absz, Real::from_si(1, p)))
    throw DomainError("lerch requires |z| < 1");
  Real eps = Real::ten_pow(-ctx.working_digits(), 64);
  double eps_d = std::pow(10.0, -ctx.working_digits());
  double sd = s.re.to_double();
  long q = sd < 0 ? static_cast<long>(-std::floor(sd)) + 1 : 0;
  TermRatioTail tail(absz.to_double(), q);
  Complex negs = neg(s);
  Complex sum = complex_power(Complex::from_real(lam), negs);
  Real zm = Real::from_si(1, p);
  for (long m = 1; m <= ctx.max_terms; ++m) {
    zm = mul(zm, z);
    Complex t = complex_power(
        Complex::from_real(add(lam, Real::from_si(m, p))), negs);
    Complex term(mul(zm, t.re), mul(zm, t.im));
    sum = add(sum, term);
    Real mag = max_upper(term.re, term.im);
    if (m >= tail.start_index && mag.to_double() * 2 * tail.inv_gap <= eps_d) {
      Real tb = mul_si(tail.bound(mag), 2);
      if (mpfr_cmp(tb.mid(), eps.mid()) <= 0) {
        sum.re.grow_radius(tb);
        sum.im.grow_radius(tb);
        return sum;
      }
    }
  }
  throw ConvergenceError("lerch did not converge within max_terms");
}

namespace {

// log Gamma(x) for x comfortably inside the Stirling zone.
Real log_gamma_stirling(const Real& x, mpfr_prec_t p, const Real& eps) {
  Real one = Real::from_si(1, p);
  Real half_log_2pi = mul_2exp(log_ball(mul_2exp(Real::pi(p), 1)), -1);
  Real logx = log_ball(x);
  Real acc = add(sub(mul(sub(x, Real::from_double(0.5, p)), logx), x),
                 half_log_2pi);
  Real x2_inv = div(one, mul(x, x));
  Real xpow = div(one, x);  // x^(1-2j)
  for (long j = 1; j <= 2048; ++j) {
    Rat w = combinatorics::bernoulli(2 * j) / (Rat(2 * j) * Rat(2 * j - 1));
    Real term = mul(rat_to_real(w, p), xpow);
    Real mag = term.abs_upper();
    if (mpfr_cmp(mag.mid(), eps.mid()) <= 0) {
      acc = add(acc, term);
      acc.grow_radius(mul_si(mag, 2));  // remainder below twice the last term
      return acc;
    }
    acc = add(acc, term);
    xpow = mul(xpow, x2_inv);
  }
  throw ConvergenceError("Stirling series did not reach tolerance");
}

}  // namespace

Real gamma_real(const Real& s, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.prec_bits();
  Real eps = Real::ten_pow(-(ctx.working_digits() + 4), 64);
  if (s.is_exact_integer()) {
    long n = s.to_si();
    if (n <= 0) throw DomainError("gamma_real pole at nonpositive integer");
    return Real::from_mpq(Rat(factorial(n - 1)).get_mpq_t(), p);
  }
  if (s.contains_zero())
    throw DomainError("gamma_real: argument ball touches a pole");
  if (s.is_negative()) {
    // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s)).
    Real pi_v = Real::pi(p);
    Real sp = sin_ball(mul(pi_v, s));
    if (sp.contains_zero())
      throw DomainError("gamma_real: argument ball touches a pole");
    return div(pi_v, mul(sp, gamma_real(sub(Real::from_si(1, p), s), ctx)));
  }
  // Shift upward until Stirling converges comfortably: x >= ~0.4 * digits.
  long zone = std::max<long>(16, (ctx.working_digits() * 2) / 5 + 4);
  Real x = s;
  Real prod = Real::from_si(1, p);
  while (definitely_less(x, Real::from_si(zone, p))) {
    prod = mul(prod, x);
    x = add_si(x, 1);
  }
  Real lg = log_gamma_stirling(x, p, eps);
  return div(exp_ball(lg), prod);
}

}  // namespace zetafun
}  // namespace dzeta
