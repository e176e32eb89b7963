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

#include "dzeta/dseries.hpp"

#include <cmath>

#include "dzeta/constants.hpp"
#include "dzeta/quadrature.hpp"
#include "dzeta/zetafun.hpp"

namespace dzeta {
namespace dseries {

void DParams::validate() const {
  if (s1.is_exact_integer() && s1.to_si() <= 0)
    throw DomainError("s1 must not be a nonpositive integer");
  if (!definitely_greater(lam, Real::from_si(-1, 64)))
    throw DomainError("lambda must exceed -1");
}

namespace {

bool exact_long(const Real& x, long* out) {
  if (!x.is_exact_integer() || !mpfr_fits_slong_p(x.mid(), MPFR_RNDN))
    return false;
  *out = x.to_si();
  return true;
}

}  // namespace

SeriesResult d_direct(const DParams& p, const PrecisionContext& ctx) {
  if (!p.s1.is_positive())
    throw DomainError("d_direct requires Re(s1) > 0");
  mpfr_prec_t prec = ctx.prec_bits();
  long s1_int = 0;
  bool s1_is_int = exact_long(p.s1, &s1_int);
  long s2_int = 0;
  bool s2_is_int = exact_long(p.s2, &s2_int);

  double s2d = p.s2.to_double();
  double lamd = p.lam.to_double();
  // Tail of sum_{k>N} 2^(2-s1-k) (k+lam)^(-s2): for s2 >= 0 the power factor
  // is monotone below its value at N+1; for s2 < 0 the geometric ratio
  // absorbs the polynomial growth once N+lam+1 >= 2|s2|.
  long ramp = s2d < 0 ? static_cast<long>(2 * (-s2d - lamd) + 8) : 0;
  auto tail = [&, ramp](long N) -> Real {
    if (N < ramp) return Real::ten_pow(60, 64);
    Real base = pow_ball(Real::from_si(2, prec),
                         sub(Real::from_si(2 - N, prec), p.s1));
    Real kf = pow_ball(add(p.lam, Real::from_si(N + 1, prec)), neg(p.s2));
    Real out = mul(base, kf);
    if (s2d < 0) out = mul_si(out, 5);  // geometric-sum slack
    return out.abs_upper();
  };
  auto term = [&](long k) -> Real {
    Real zm1 = s1_is_int
                   ? zetafun::zeta_minus_one(s1_int + k, ctx)
                   : zetafun::zeta_minus_one(add_si(p.s1, k), ctx);
    Real kl = add(p.lam, Real::from_si(k, prec));
    Real weight = s2_is_int ? pow_si(kl, -s2_int) : pow_ball(kl, neg(p.s2));
    return mul(zm1, weight);
  };
  return sum_series(term, tail, ctx);
}

SeriesResult d_direct(long n, long m, long mu, const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.prec_bits();
  return d_direct(DParams(Real::from_si(n, prec), Real::from_si(m, prec),
                          Real::from_si(mu, prec)),
                  ctx);
}

ClosedForm closed_form_s2_zero(long n) {
  if (n < 1) throw DomainError("closed_form_s2_zero requires n >= 1");
  ClosedForm f{Rat(n)};
  for (long k = 2; k <= n; ++k) f.add_zeta(k, Rat(-1));
  return f;
}

ClosedForm closed_form_negative_base(long m) {
  if (m < 0) throw DomainError("closed_form_negative_base requires m >= 0");
  ClosedForm f{Rat(1)};
  for (long k = 2; k <= m + 1; ++k)
    f.add_zeta(k, Rat(factorial(k - 1) * combinatorics::stirling2(m + 1, k)));
  return f;
}

namespace {

Rat int_pow(long base, long e) {
  // base^e for e >= 0, allowing negative base
  Int b(base);
  Int r(1);
  for (long i = 0; i < e; ++i) r *= b;
  return Rat(r);
}

}  // namespace

ClosedForm closed_form_reduce(long n, long m, long mu) {
  if (n < 1 || m < 0 || mu < 0)
    throw DomainError("closed_form_reduce requires n >= 1, m >= 0, mu >= 0");
  ClosedForm f;
  for (long l = 0; l <= m; ++l) {
    // (mu - n)^(m - l); 0^0 = 1 in the binomial expansion
    if (mu == n && m - l > 0) continue;
    Rat w = Rat(binomial(m, l)) * int_pow(mu - n, m - l);
    f.add_scaled(closed_form_negative_base(l), w);
  }
  for (long k = 2; k <= n; ++k) {
    Rat w = int_pow(k + mu - n, m);
    f.add_zeta(k, -w);
    f.rational_part += w;
  }
  f.prune();
  return f;
}

IndexShift index_shift(long n, long m, long mu) {
  if (n < 1 || mu < 1) throw DomainError("index_shift requires n, mu >= 1");
  if (m == 0) throw DomainError("index_shift requires m != 0");
  IndexShift out;
  if (n >= mu) {
    if (n - mu + 1 < 1) throw DomainError("index_shift target out of domain");
    out.n1 = n - mu + 1;
    out.mu1 = 1;
    for (long k = 2; k <= mu; ++k) {
      // (zeta(k + n - mu) - 1)/k^m
      Rat w = m >= 0 ? Rat(1) / int_pow(k, m) : int_pow(k, -m);
      out.correction.add_zeta(k + n - mu, w);
      out.correction.rational_part -= w;
    }
  } else {
    out.n1 = 1;
    out.mu1 = mu - n + 1;
    for (long k = 2; k <= n; ++k) {
      Rat w = m >= 0 ? Rat(1) / int_pow(k + mu - n, m) : int_pow(k + mu - n, -m);
      out.correction.add_zeta(k, w);
      out.correction.rational_part -= w;
    }
  }
  out.correction.prune();
  return out;
}

std::pair<Real, Real> d_m_sum(long n, long mu, MSumVariant variant,
                              const PrecisionContext& ctx) {
  if (n < 1 || mu < 1) throw DomainError("d_m_sum requires n, mu >= 1");
  mpfr_prec_t prec = ctx.prec_bits();
  Real eps = Real::ten_pow(-ctx.decimal_digits, 64);

  // |D(n, m; mu)| <= D(n, 0; mu) (1+mu)^(-m) gives the geometric tail.
  Real d0 = d_direct(n, 0, mu, ctx).value.abs_upper();
  Real ratio = div(Real::from_si(1, prec), Real::from_si(1 + mu, prec));
  Real lhs = Real::zero(prec);
  long m = 0;
  while (true) {
    long mm = (variant == MSumVariant::odd) ? 2 * m + 1 : m;
    Real term = d_direct(n, mm, mu, ctx).value;
    if (variant == MSumVariant::alternating && (m % 2 == 1)) term = neg(term);
    lhs = add(lhs, term);
    Real tb;
    if (variant == MSumVariant::odd) {
      Real q = mul(ratio, ratio);
      tb = div(mul(d0, pow_si(ratio, 2 * m + 3)),
               sub(Real::from_si(1, prec), q))
               .abs_upper();
    } else {
      tb = div(mul(d0, pow_si(ratio, m + 1)), sub(Real::from_si(1, prec), ratio))
               .abs_upper();
    }
    if (mpfr_cmp(tb.mid(), eps.mid()) <= 0) {
      lhs.grow_radius(tb);
      break;
    }
    ++m;
    if (m > 100000) throw ConvergenceError("d_m_sum did not converge");
  }

  Real rhs(prec);
  auto gamma_at = [&](long mu_arg) {
    return constants::gamma_general(
        constants::GammaParams::of(n, 1, mu_arg, prec), ctx);
  };
  Real zeta_block = Real::zero(prec);
  for (long k = 2; k <= n; ++k)
    zeta_block = add(zeta_block, zetafun::zeta(k, ctx));
  switch (variant) {
    case MSumVariant::plain: {
      Real h = rat_to_real(combinatorics::harmonic(mu - 1, 1), prec);
      rhs = sub(sub(add(Real::from_si(n, prec), h), gamma_at(mu - 1)),
                zeta_block);
      break;
    }
    case MSumVariant::alternating: {
      Real h = rat_to_real(combinatorics::harmonic(mu + 1, 1), prec);
      rhs = sub(add(sub(Real::from_si(n, prec), h), gamma_at(mu + 1)),
                zeta_block);
      break;
    }
    case MSumVariant::odd: {
      Real h = rat_to_real(combinatorics::harmonic(mu, 1), prec);
      Rat inv = Rat(1) / (Rat(mu) * Rat(mu + 1));
      Real inner = add(add(gamma_at(mu + 1), gamma_at(mu - 1)),
                       rat_to_real(inv, prec));
      rhs = sub(h, mul_2exp(inner, -1));
      break;
    }
  }
  return {lhs, rhs};
}

Real d_via_integral(const DParams& p, const PrecisionContext& ctx, double tol) {
  if (!p.s1.is_positive()) throw DomainError("d_via_integral requires s1 > 0");
  // The oracle runs at a modest fixed precision; it certifies 1e-8 agreement,
  // not full-precision values.
  PrecisionContext qctx(std::max(20, ctx.decimal_digits / 2), 15, ctx.max_terms);
  mpfr_prec_t prec = qctx.prec_bits();
  Real s1 = p.s1;
  Real s2 = p.s2;
  Real lam = p.lam;
  Real gamma_s1p1 = zetafun::gamma_real(add_si(s1, 1), qctx);

  Integrand f;
  f.sigma = s1.to_double();
  f.eval = [=](const Real& t) -> Real {
    // t^(s1-1) e^-t / (e^t - 1) * sum_{k>=1} t^k (k+lam)^(-s2) / Gamma(s1+k)
    Real tp = pow_ball(t, sub(s1, Real::from_si(1, prec)));
    Real em = exp_ball(neg(t));
    Real den = expm1_ball(t);
    Real outer = div(mul(tp, em), den);
    Real sum = Real::zero(prec);
    Real u = div(t, gamma_s1p1);  // t^k / Gamma(s1+k) at k = 1
    double td = t.to_double();
    for (long k = 1; k <= 100000; ++k) {
      Real w = pow_ball(add(lam, Real::from_si(k, prec)), neg(s2));
      sum = add(sum, mul(u, w));
      Real next_ratio = div(t, add(s1, Real::from_si(k, prec)));
      u = mul(u, next_ratio);
      // factorial decay: once k + s1 > 2t the remaining mass is below the
      // doubled next term times the power weight
      if (k > 2 * td + 8) {
        Real wb = pow_ball(add(lam, Real::from_si(k + 1, prec)), neg(s2));
        Real bound = mul_si(mul(u.abs_upper(), wb.abs_upper()), 4);
        if (bound.to_double() < 1e-4 * tol || bound.to_double() < 1e-30) {
          sum.grow_radius(bound);
          break;
        }
      }
    }
    return mul(outer, sum);
  };
  return integrate(f, tol, qctx);
}

Complex d_functional_rhs(const DParams& p, const PrecisionContext& ctx,
                         BilateralBase base) {
  mpfr_prec_t prec = ctx.prec_bits();
  Real one = Real::from_si(1, prec);
  if (!definitely_greater(sub(p.s1, p.lam), one))
    throw DomainError("functional relation requires Re(s1 - lam) > 1");
  if (!p.s2.is_negative())
    throw DomainError("functional relation requires Re(s2) < 0");
  if (definitely_greater(p.lam, Real::zero(prec)) ||
      !definitely_greater(p.lam, Real::from_si(-1, prec)))
    throw DomainError("functional relation requires -1 < lam <= 0");

  Real eps = Real::ten_pow(-std::min(ctx.decimal_digits, 9), 64);
  Real gamma_factor = zetafun::gamma_real(sub(one, p.s2), ctx);
  double gamma_d = gamma_factor.abs_upper().to_double();
  Real two_pi = mul_2exp(Real::pi(prec), 1);
  Complex expo = Complex(sub(p.s2, one), Real::zero(prec));
  Real gap_m1 = sub(sub(p.s1, p.lam), one);  // s1 - lam - 1 > 0

  // |l| > L remainder of an inner sum, by comparison with
  // 2 int_L^inf (2 pi x)^(s2-1) dx; the Gamma and k weights are applied when
  // the inner ball is folded into the k term.
  auto l_tail = [&](long L) {
    Real t = pow_ball(mul_si(two_pi, L), sub(p.s2, one));
    return mul_si(div(mul(t, mul_si(two_pi, L)), neg(p.s2)), 2).abs_upper();
  };

  // k > K remainder. The inner sums are uniformly below
  // (log(K+1))^(s2-1) + 4 (2pi)^(s2-1) for k > K, and sum_{k>K} k^(lam-s1)
  // is below K^(1-(s1-lam)) / (s1-lam-1).
  auto k_tail = [&](long K) {
    Real inner_bound =
        add(pow_ball(log_ball(Real::from_si(K + 1, prec)), sub(p.s2, one)),
            mul_si(pow_ball(two_pi, sub(p.s2, one)), 4));
    Real ksum = div(pow_ball(Real::from_si(K, prec), neg(gap_m1)), gap_m1);
    return mul(mul(gamma_factor, inner_bound), ksum).abs_upper();
  };

  Complex acc(prec);
  Real lam_phase = mul(two_pi, p.lam);
  double eps_d = eps.to_double();
  double s2_d = p.s2.to_double();
  double gap = p.s1.to_double() - p.lam.to_double();
  for (long k = 2;; ++k) {
    Real logk = log_ball(Real::from_si(k, prec));
    Complex inner(prec);
    // l = 0 term: base log k, or -log k with principal arg = pi.
    if (base == BilateralBase::log_plus) {
      inner = complex_power(Complex::from_real(logk), expo);
    } else {
      inner = complex_power(Complex(neg(logk), Real::zero(prec)), expo);
    }
    // Symmetric pairing of l and -l; for real parameters the pair sum is
    // real. The per-k inner-tail allowance grows like k^(gap - 1.1): folded
    // back through the Gamma(1-s2) k^(lam-s1) weight the contributions sum
    // to under eps * sum k^-1.1 / 20 < eps/2.
    double allowance = eps_d * std::pow(static_cast<double>(k), gap - 1.1) /
                       (20.0 * (1.0 + gamma_d));
    long l_needed = static_cast<long>(
        std::ceil(std::pow(2.0 / (allowance * (-s2_d)), 1.0 / (-s2_d)) /
                  (2.0 * std::acos(-1.0)))) + 1;
    if (l_needed < 1) l_needed = 1;
    for (long l = 1; l <= l_needed; ++l) {
      Real im = mul_si(two_pi, l);
      Complex zp = (base == BilateralBase::log_plus)
                       ? Complex(logk, im)
                       : Complex(neg(logk), im);
      Complex zm = (base == BilateralBase::log_plus)
                       ? Complex(logk, neg(im))
                       : Complex(neg(logk), neg(im));
      Real ph = mul_si(lam_phase, l);
      Complex term = add(mul(cis(ph), complex_power(zp, expo)),
                         mul(cis(neg(ph)), complex_power(zm, expo)));
      inner = add(inner, term);
    }
    Real tb = l_tail(l_needed);
    inner.re.grow_radius(tb);
    inner.im.grow_radius(tb);
    Real kw = pow_ball(Real::from_si(k, prec), sub(p.lam, p.s1));
    Real w = mul(kw, gamma_factor);
    acc = add(acc, Complex(mul(w, inner.re), mul(w, inner.im)));
    Real kt = k_tail(k);
    if (k >= 8 && mpfr_cmp(kt.mid(), eps.mid()) <= 0) {
      acc.re.grow_radius(kt);
      acc.im.grow_radius(kt);
      break;
    }
    if (k > 2000000)
      throw ConvergenceError("functional relation outer sum stalled");
  }
  return acc;
}

}  // namespace dseries
}  // namespace dzeta
