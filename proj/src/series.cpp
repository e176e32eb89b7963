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

#include "dzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dzeta {

SeriesResult sum_series(const TermFn& term, const TailBoundFn& tail_bound,
                        const PrecisionContext& ctx) {
  return sum_series(term, tail_bound, ctx,
                    Real::ten_pow(-ctx.decimal_digits, 64));
}

SeriesResult sum_series(const TermFn& term, const TailBoundFn& tail_bound,
                        const PrecisionContext& ctx, const Real& epsilon) {
  mpfr_prec_t p = ctx.prec_bits();
  SeriesResult res(p);
  Real sum = Real::zero(p);
  Real eps_up = epsilon.upper();
  long k = 0;
  while (k < ctx.max_terms) {
    ++k;
    sum = add(sum, term(k));
    Real tb = tail_bound(k).upper();
    if (mpfr_number_p(tb.mid()) && mpfr_cmp(tb.mid(), eps_up.mid()) <= 0) {
      res.value = sum;
      res.value.grow_radius(tb);
      res.terms_used = k;
      res.tail_bound = tb;
      res.converged = true;
      return res;
    }
  }
  Real tb = tail_bound(k);
  res.value = sum;
  if (mpfr_number_p(tb.mid())) res.value.grow_radius(tb);
  res.terms_used = k;
  res.tail_bound = tb;
  res.converged = false;
  return res;
}

namespace {

// Magnitude of a ball midpoint as log2, or a deep floor for zero.
double log2_mag(const Real& x) {
  if (mpfr_zero_p(x.mid())) return -1e9;
  long exp;
  double m = mpfr_get_d_2exp(&exp, x.mid(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(exp);
}

bool below_noise(const Real& d) {
  // Difference indistinguishable from its own error bar.
  if (mpfr_zero_p(d.mid())) return true;
  mpfr_t r4;
  mpfr_init2(r4, Real::kRadiusPrec);
  mpfr_mul_ui(r4, d.rad(), 4, MPFR_RNDU);
  mpfr_t am;
  mpfr_init2(am, Real::kRadiusPrec);
  mpfr_abs(am, d.mid(), MPFR_RNDD);
  bool noise = mpfr_cmp(am, r4) <= 0;
  mpfr_clear(r4);
  mpfr_clear(am);
  return noise;
}

struct Tableau {
  std::vector<Real> base;      // F(n_i)
  std::vector<Real> diagonal;  // last extrapolant of each stage
  std::vector<int> orders;
};

// One full extrapolation pass over the current ladder.
Tableau extrapolate(const std::vector<Real>& f, int max_stages, mpfr_prec_t p) {
  Tableau t;
  t.base = f;
  std::vector<Real> row = f;
  int stage = 0;
  int last_order = 1;
  while (stage < max_stages && row.size() >= 3) {
    // Estimate the decay order from the last few difference ratios.
    std::vector<double> ests;
    for (size_t i = row.size() >= 5 ? row.size() - 5 : 0; i + 2 < row.size(); ++i) {
      Real d0 = sub(row[i + 1], row[i]);
      Real d1 = sub(row[i + 2], row[i + 1]);
      if (below_noise(d0) || below_noise(d1)) continue;
      double est = log2_mag(d0) - log2_mag(d1);
      if (est > 0.1 && est < 64.0) ests.push_back(est);
    }
    if (ests.empty()) break;  // differences at noise floor everywhere
    std::sort(ests.begin(), ests.end());
    double med = ests[ests.size() / 2];
    int ord = std::max(1, static_cast<int>(std::lround(med)));
    // Orders never decrease along the ladder; a repeat is fine (log factors
    // need the same order eliminated twice).
    ord = std::max(ord, last_order);
    last_order = ord;
    Real denom = sub(Real::two_pow(ord, p), Real::from_si(1, p));
    std::vector<Real> next;
    next.reserve(row.size() - 1);
    for (size_t i = 0; i + 1 < row.size(); ++i) {
      Real d = sub(row[i + 1], row[i]);
      next.push_back(add(row[i + 1], div(d, denom)));
    }
    row = std::move(next);
    t.diagonal.push_back(row.back());
    t.orders.push_back(ord);
    ++stage;
  }
  if (t.diagonal.empty()) t.diagonal.push_back(f.back());
  return t;
}

}  // namespace

Real euler_maclaurin_limit(const SequenceFn& partial_sum,
                           const SequenceFn& subtractor, int correction_order,
                           const PrecisionContext& ctx) {
  return euler_maclaurin_limit(partial_sum, subtractor, correction_order, ctx,
                               LimitLadderOptions{});
}

Real euler_maclaurin_limit(const SequenceFn& partial_sum,
                           const SequenceFn& subtractor, int correction_order,
                           const PrecisionContext& ctx,
                           const LimitLadderOptions& opt) {
  mpfr_prec_t p = ctx.prec_bits();
  Real target = Real::ten_pow(-ctx.decimal_digits, 64);
  int max_levels = std::max(opt.initial_levels, correction_order + 1);

  std::vector<Real> f;
  long n = opt.n0;
  auto push_level = [&]() {
    f.push_back(sub(partial_sum(n), subtractor(n)));
    n *= 2;
  };
  for (int i = 0; i < opt.initial_levels; ++i) push_level();

  // Constant sequences converge immediately.
  {
    bool all_noise = true;
    for (size_t i = 0; i + 1 < f.size(); ++i)
      if (!below_noise(sub(f[i + 1], f[i]))) {
        all_noise = false;
        break;
      }
    if (all_noise) return f.back();
  }

  Real best(p);
  Real best_delta(p);
  bool have_best = false;
  while (true) {
    Tableau t = extrapolate(f, correction_order, p);
    Real cur_best(p);
    Real cur_delta(p);
    if (t.orders.empty()) {
      // No stage could run; fall back to the raw sequence tail.
      cur_best = f.back();
      cur_delta = abs_ball(sub(f.back(), f[f.size() - 2])).abs_upper();
    } else {
      // Contraction along the diagonal: |T_s - T_{s-1}| should shrink.
      cur_best = t.diagonal.front();
      cur_delta = abs_ball(sub(t.diagonal.front(), t.base.back())).abs_upper();
      for (size_t s = 1; s < t.diagonal.size(); ++s) {
        Real d = abs_ball(sub(t.diagonal[s], t.diagonal[s - 1])).abs_upper();
        if (mpfr_cmp(d.mid(), cur_delta.mid()) <= 0) {
          cur_delta = d;
          cur_best = t.diagonal[s];
        }
      }
    }
    if (!have_best || mpfr_cmp(cur_delta.mid(), best_delta.mid()) < 0) {
      best = cur_best;
      best_delta = cur_delta;
      have_best = true;
    }
    // Done if the empirical contraction beat the target or the ladder is full.
    bool met = mpfr_cmp(best_delta.mid(), target.mid()) <= 0;
    if (met || static_cast<int>(f.size()) >= max_levels) break;
    push_level();
    push_level();
  }

  // Extrapolation must genuinely contract against the raw sequence; a ladder
  // whose best diagonal step is still comparable to the last raw difference
  // (divergent or oscillating input) is rejected.
  Real raw_last = abs_ball(sub(f.back(), f[f.size() - 2]));
  if (!have_best) throw ConvergenceError("limit did not stabilize");
  if (!below_noise(raw_last)) {
    Real half_raw = mul_2exp(raw_last.abs_upper(), -1);
    if (mpfr_cmp(best_delta.mid(), half_raw.mid()) >= 0)
      throw ConvergenceError("limit did not stabilize");
  }

  Real out = best;
  Real margin = mul_si(best_delta, static_cast<long>(opt.safety));
  out.grow_radius(margin);
  return out;
}

}  // namespace dzeta
