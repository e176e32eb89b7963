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

#include "dzeta/constants.hpp"

#include <map>
#include <mutex>

#include "dzeta/combinatorics.hpp"
#include "dzeta/dseries.hpp"
#include "dzeta/series.hpp"
#include "dzeta/zetafun.hpp"

namespace dzeta {
namespace constants {

Real gamma_general(const GammaParams& p, const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.prec_bits();
  dseries::DParams dp(p.alpha, Real::from_si(p.beta, prec),
                      Real::from_si(p.mu, prec));
  SeriesResult d = dseries::d_direct(dp, ctx);
  if (!d.converged)
    throw ConvergenceError("gamma_general: underlying series did not converge");
  if (p.mu == 0) return neg(d.value);
  Rat h = combinatorics::harmonic(p.mu, p.beta);
  return sub(rat_to_real(h, prec), d.value);
}

Real gamma_general_by_limit(const GammaParams& p, long n_max,
                            const PrecisionContext& ctx) {
  if (n_max < 10) throw DomainError("gamma_general_by_limit requires n_max >= 10");
  mpfr_prec_t prec = ctx.prec_bits();

  // Bracket of the defining limit at cutoff n, evaluated incrementally:
  //   sum_{l=1..mu} l^-beta sum_{k<=n} k^-(alpha+l-mu)
  //   - sum_{2<=k<=n} Li_beta(1/k) k^(mu-alpha)
  struct State {
    long n = 0;
    std::vector<Real> inner;  // one partial power sum per l
    Real li_sum;
    explicit State(mpfr_prec_t pr) : li_sum(pr) {}
  };
  State st(prec);
  st.inner.assign(static_cast<size_t>(p.mu), Real::zero(prec));

  auto bracket = [&](long n) -> Real {
    for (long k = st.n + 1; k <= n; ++k) {
      Real kb = Real::from_si(k, prec);
      for (long l = 1; l <= p.mu; ++l) {
        Real e = add(p.alpha, Real::from_si(l - p.mu, prec));
        st.inner[l - 1] = add(st.inner[l - 1], pow_ball(kb, neg(e)));
      }
      if (k >= 2) {
        Real li = zetafun::polylog(p.beta, div(Real::from_si(1, prec), kb), ctx);
        Real w = pow_ball(kb, sub(Real::from_si(p.mu, prec), p.alpha));
        st.li_sum = add(st.li_sum, mul(li, w));
      }
    }
    st.n = n;
    Real acc = neg(st.li_sum);
    for (long l = 1; l <= p.mu; ++l) {
      Rat c(1);
      Int lp;
      mpz_ui_pow_ui(lp.get_mpz_t(), static_cast<unsigned long>(l),
                    static_cast<unsigned long>(p.beta < 0 ? -p.beta : p.beta));
      Rat w = p.beta >= 0 ? Rat(1) / Rat(lp) : Rat(lp);
      acc = add(acc, mul(rat_to_real(w * c, prec), st.inner[l - 1]));
    }
    return acc;
  };

  long n0 = n_max / 4;
  Real t0 = bracket(n0);
  Real t1 = bracket(2 * n0);
  Real t2 = bracket(4 * n0);

  // One empirical-order elimination across the three points, then a second
  // stage from the two first-stage values.
  Real d0 = sub(t1, t0);
  Real d1 = sub(t2, t1);
  if (d1.contains_zero() || d0.contains_zero()) {
    Real out = t2;
    out.grow_radius(abs_ball(d1).abs_upper());
    return out;
  }
  double ord = std::log2(std::fabs(d0.to_double())) -
               std::log2(std::fabs(d1.to_double()));
  if (!(ord > 0.05 && ord < 64))
    throw ConvergenceError("limit did not stabilize");
  long o = std::max<long>(1, std::lround(ord));
  Real denom = sub(Real::two_pow(o, prec), Real::from_si(1, prec));
  Real u1 = add(t1, div(sub(t1, t0), denom));
  Real u2 = add(t2, div(sub(t2, t1), denom));
  Real step = abs_ball(sub(u2, u1)).abs_upper();
  Real out = u2;
  // Empirical contraction bound: the next omitted order is at best one power
  // of 2 smaller per doubling; keep a generous multiple of the last movement.
  out.grow_radius(mul_si(step, 8));
  return out;
}

Real euler_gamma(const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.prec_bits();
  Cache& cache = Cache::global();
  if (auto hit = cache.load("gamma", ctx.decimal_digits, prec)) return *hit;
  Real v = gamma_general(GammaParams::of(1, 1, 1, prec), ctx);
  cache.store("gamma", ctx.decimal_digits, v);
  return v;
}

namespace {

// Incremental partial sums shared by ladder evaluations.
class RunningSum {
public:
  explicit RunningSum(mpfr_prec_t prec, std::function<Real(long)> term)
      : sum_(prec), term_(std::move(term)) {}
  Real operator()(long n) {
    for (long k = n_ + 1; k <= n; ++k) sum_ = add(sum_, term_(k));
    n_ = n;
    return sum_;
  }

private:
  Real sum_;
  long n_ = 0;
  std::function<Real(long)> term_;
};

}  // namespace

Real euler_gamma_limit_oracle(const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.with_extra_guard(10).prec_bits();
  auto partial = std::make_shared<RunningSum>(prec, [prec](long k) {
    return div_si(Real::from_si(1, prec), k);
  });
  SequenceFn ps = [partial](long n) { return (*partial)(n); };
  SequenceFn sb = [prec](long n) {
    return log_ball(Real::from_si(n, prec));
  };
  LimitLadderOptions opt;
  opt.n0 = 64;
  opt.initial_levels = 10;
  return euler_maclaurin_limit(ps, sb, 16, ctx.with_extra_guard(10), opt);
}

Real log_bendersky(long m, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("log_bendersky requires m >= 0");
  Cache& cache = Cache::global();
  std::string id = "A" + std::to_string(m);
  // The ladder sums reach n ~ 2^21 with summands up to n^(m+1) log n; raise
  // the working precision enough that accumulated rounding stays far below
  // the target digits.
  int extra = 12 + static_cast<int>((m + 2) * 7);
  PrecisionContext lctx = ctx.with_extra_guard(extra);
  mpfr_prec_t prec = lctx.prec_bits();
  if (auto hit = cache.load(id, ctx.decimal_digits, prec)) return *hit;

  auto partial = std::make_shared<RunningSum>(prec, [prec, m](long k) {
    Real kb = Real::from_si(k, prec);
    return mul(pow_si(kb, m), log_ball(kb));
  });
  SequenceFn ps = [partial](long n) { return (*partial)(n); };
  SequenceFn sb = [prec, m](long n) {
    return combinatorics::p_poly(n, m).eval(n, prec);
  };
  LimitLadderOptions opt;
  opt.n0 = 64;
  opt.initial_levels = 10;
  Real v = euler_maclaurin_limit(ps, sb, 15, lctx, opt);
  cache.store(id, ctx.decimal_digits, v);
  return v;
}

namespace {

// gamma_1 by the defining limit on a Richardson ladder.
Real stieltjes_gamma1_limit(const PrecisionContext& ctx, long n0, int levels,
                            int stages) {
  PrecisionContext lctx = ctx.with_extra_guard(12);
  mpfr_prec_t prec = lctx.prec_bits();
  auto partial = std::make_shared<RunningSum>(prec, [prec](long k) {
    Real kb = Real::from_si(k, prec);
    return div(log_ball(kb), kb);
  });
  SequenceFn ps = [partial](long n) { return (*partial)(n); };
  SequenceFn sb = [prec](long n) {
    Real ln = log_ball(Real::from_si(n, prec));
    return mul_2exp(mul(ln, ln), -1);
  };
  LimitLadderOptions opt;
  opt.n0 = n0;
  opt.initial_levels = levels;
  return euler_maclaurin_limit(ps, sb, stages, lctx, opt);
}

// sum_{k>=1} a log k / (k (k+a)) for integer a >= 1, by splitting at K > a
// and expanding the tail into zeta' values:
//   sum_{k>K} log k / k^2 * (1 + a/k)^-1
//     = sum_{j>=0} (-a)^j [ -zeta'(j+2) - sum_{2<=k<=K} log k k^-(j+2) ].
Real stieltjes_series(long a, const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.prec_bits();
  Real eps = Real::ten_pow(-(ctx.working_digits() + 2), 64);
  long K = std::max<long>(32, 4 * a);
  Real acc = Real::zero(prec);
  for (long k = 2; k <= K; ++k) {
    Real kb = Real::from_si(k, prec);
    acc = add(acc, div(mul_si(log_ball(kb), a),
                       mul(kb, add_si(kb, a))));
  }
  // tail in powers of a/k
  std::vector<Real> logk_cache;
  for (long k = 2; k <= K; ++k)
    logk_cache.push_back(log_ball(Real::from_si(k, prec)));
  Real a_pow = Real::from_si(a, prec);  // carries a * (-a)^j
  for (long j = 0;; ++j) {
    Real t = neg(zetafun::zeta_prime(j + 2, ctx));
    for (long k = 2; k <= K; ++k)
      t = sub(t, div(logk_cache[k - 2],
                     pow_si(Real::from_si(k, prec), j + 2)));
    acc = add(acc, mul(a_pow, t));
    // remaining terms are geometric with ratio a/(K+1) against the
    // decreasing zeta'-tail magnitudes
    Real bound =
        mul(abs_ball(mul(a_pow, t)),
            div(Real::from_si(a, prec), Real::from_si(K + 1 - a, prec)))
            .abs_upper();
    if (mpfr_cmp(bound.mid(), eps.mid()) <= 0 && j >= 2) {
      acc.grow_radius(bound);
      return acc;
    }
    a_pow = mul_si(a_pow, -a);
    if (j > 10000) throw ConvergenceError("stieltjes series stalled");
  }
}

}  // namespace

Real log_stieltjes_shift(long a, const PrecisionContext& ctx) {
  if (a < 0) throw DomainError("log_stieltjes_shift requires a >= 0");
  Cache& cache = Cache::global();
  std::string id = "Aneg1_" + std::to_string(a);
  mpfr_prec_t prec = ctx.prec_bits();
  if (auto hit = cache.load(id, ctx.decimal_digits, prec)) return *hit;
  Real v(prec);
  if (a == 0) {
    v = stieltjes_gamma1_limit(ctx, 64, 10, 16);
  } else {
    v = sub(log_stieltjes_shift(0, ctx), stieltjes_series(a, ctx));
  }
  cache.store(id, ctx.decimal_digits, v);
  return v;
}

Real stieltjes_gamma1_oracle(const PrecisionContext& ctx) {
  // Different ladder base and depth than the production configuration.
  return stieltjes_gamma1_limit(ctx, 96, 9, 12);
}

Real gamma_one_one_closed(long mu, const PrecisionContext& ctx) {
  if (mu < 1) throw DomainError("gamma_one_one_closed requires mu >= 1");
  mpfr_prec_t prec = ctx.prec_bits();
  Real acc = div_si(euler_gamma(ctx), mu);
  for (long j = 0; j <= mu - 2; ++j) {
    Real c = rat_to_real(Rat(binomial(mu - 1, j)), prec);
    acc = add(acc, mul(c, log_bendersky(j, ctx)));
  }
  return acc;
}

Real zeta_prime_alternating_sum(const PrecisionContext& ctx) {
  // |zeta'(sigma)| = sum_{k>=2} log k k^-sigma <= zeta(sigma-1) - 1 < 2^(3-sigma),
  // so the alternating series has tail below 2^(2-L) after L terms.
  auto term = [&](long l) {
    Real v = zetafun::zeta_prime(l + 1, ctx);
    return (l % 2 == 1) ? neg(v) : v;
  };
  auto tail = [&](long L) { return Real::two_pow(2 - L, 64); };
  SeriesResult r = sum_series(term, tail, ctx);
  if (!r.converged)
    throw ConvergenceError("zeta' alternating sum did not converge");
  return r.value;
}

}  // namespace constants
}  // namespace dzeta
