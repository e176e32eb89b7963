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

#include "dzeta/real.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <vector>

namespace dzeta {

namespace {

mpfr_prec_t join_prec(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}

// Half-ulp bound for a correctly rounded (RNDN) midpoint: 2^(exp - prec - 1).
void rad_add_half_ulp(mpfr_ptr rad, mpfr_srcptr mid) {
  if (mpfr_zero_p(mid) || !mpfr_number_p(mid)) return;
  mpfr_exp_t e = mpfr_get_exp(mid) - mpfr_get_prec(mid) - 1;
  mpfr_t u;
  mpfr_init2(u, 8);
  mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
  mpfr_add(rad, rad, u, MPFR_RNDU);
  mpfr_clear(u);
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(mid_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(mid_, other.prec());
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, other.prec());
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }
  return *this;
}

Real::~Real() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

Real Real::zero(mpfr_prec_t prec) { return Real(prec); }

Real Real::from_si(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.mid_, v, MPFR_RNDN);
  rad_add_half_ulp(r.rad_, r.mid_);
  if (mpfr_fits_slong_p(r.mid_, MPFR_RNDN) && mpfr_get_si(r.mid_, MPFR_RNDN) == v &&
      mpfr_integer_p(r.mid_))
    mpfr_set_zero(r.rad_, 1);
  return r;
}

Real Real::from_double(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.mid_, v, MPFR_RNDN);  // doubles are exact at prec >= 53
  if (prec < 53) rad_add_half_ulp(r.rad_, r.mid_);
  return r;
}

Real Real::from_mpq(mpq_srcptr q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.mid_, q, MPFR_RNDN);
  rad_add_half_ulp(r.rad_, r.mid_);
  return r;
}

Real Real::from_str(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.mid_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.mid_))
    throw DomainError("unparseable decimal literal: " + s);
  rad_add_half_ulp(r.rad_, r.mid_);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.mid_, MPFR_RNDN);
  rad_add_half_ulp(r.rad_, r.mid_);
  return r;
}

Real Real::two_pow(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.mid_, 1, e, MPFR_RNDN);
  return r;
}

Real Real::ten_pow(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui(r.mid_, 10, MPFR_RNDN);
  mpfr_pow_si(r.mid_, r.mid_, e, MPFR_RNDN);
  rad_add_half_ulp(r.rad_, r.mid_);
  return r;
}

void Real::grow_radius(const Real& delta) {
  mpfr_t t;
  mpfr_init2(t, kRadiusPrec);
  mpfr_abs(t, delta.mid_, MPFR_RNDU);
  mpfr_add(t, t, delta.rad_, MPFR_RNDU);
  mpfr_add(rad_, rad_, t, MPFR_RNDU);
  mpfr_clear(t);
}

void Real::grow_radius_2exp(long e) {
  mpfr_t u;
  mpfr_init2(u, 8);
  mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
  mpfr_clear(u);
}

void Real::absorb_rounding() { rad_add_half_ulp(rad_, mid_); }

bool Real::contains_zero() const {
  if (mpfr_zero_p(mid_)) return true;
  mpfr_t a;
  mpfr_init2(a, kRadiusPrec);
  mpfr_abs(a, mid_, MPFR_RNDD);
  bool in = mpfr_cmp(a, rad_) <= 0;
  mpfr_clear(a);
  return in;
}

bool Real::is_positive() const {
  return mpfr_sgn(mid_) > 0 && !contains_zero();
}

bool Real::is_negative() const {
  return mpfr_sgn(mid_) < 0 && !contains_zero();
}

bool Real::is_exact_integer() const {
  return rad_is_zero() && mpfr_integer_p(mid_);
}

double Real::radius_double() const {
  double d = mpfr_get_d(rad_, MPFR_RNDU);
  if (d == 0.0 && !mpfr_zero_p(rad_)) d = 1e-300;
  return d;
}

Real Real::upper() const {
  Real r(prec());
  mpfr_t w;
  mpfr_init2(w, prec());
  mpfr_add(w, mid_, rad_, MPFR_RNDU);
  mpfr_set(r.mid_, w, MPFR_RNDU);
  mpfr_clear(w);
  return r;
}

Real Real::lower() const {
  Real r(prec());
  mpfr_t w;
  mpfr_init2(w, prec());
  mpfr_sub(w, mid_, rad_, MPFR_RNDD);
  mpfr_set(r.mid_, w, MPFR_RNDD);
  mpfr_clear(w);
  return r;
}

Real Real::abs_upper() const {
  Real r(prec());
  mpfr_abs(r.mid_, mid_, MPFR_RNDU);
  mpfr_add(r.mid_, r.mid_, rad_, MPFR_RNDU);
  return r;
}

Real Real::abs_lower() const {
  Real r(prec());
  mpfr_abs(r.mid_, mid_, MPFR_RNDD);
  mpfr_sub(r.mid_, r.mid_, rad_, MPFR_RNDD);
  if (mpfr_sgn(r.mid_) < 0) mpfr_set_zero(r.mid_, 1);
  return r;
}

std::string Real::str(int decimal_places) const {
  if (decimal_places < 0) decimal_places = 0;
  std::vector<char> buf(static_cast<size_t>(decimal_places) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimal_places, mid_);
  return std::string(buf.data());
}

std::string Real::radius_str() const {
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.2Re", rad_);
  return std::string(buf);
}

namespace {

std::string mpfr_lossless_str(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, 0, x, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // value = 0.<digits> * 10^e
  return sign + "0." + digits + "e" + std::to_string(static_cast<long>(e));
}

}  // namespace

std::pair<std::string, std::string> Real::exact_strings() const {
  return {mpfr_lossless_str(mid_), mpfr_lossless_str(rad_)};
}

Real Real::from_exact_strings(const std::string& mid, const std::string& rad,
                              mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.mid_, mid.c_str(), 10, MPFR_RNDN) != 0)
    throw IoError("bad midpoint string: " + mid);
  if (mpfr_set_str(r.rad_, rad.c_str(), 10, MPFR_RNDU) != 0)
    throw IoError("bad radius string: " + rad);
  if (mpfr_sgn(r.rad_) < 0) throw IoError("negative radius");
  // Reading at the writer's precision recovers the value exactly; at any
  // other precision the parse rounds, so account for it.
  r.absorb_rounding();
  return r;
}

Real add(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_add(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(const_cast<mpfr_ptr>(r.rad()), a.rad(), b.rad(), MPFR_RNDU);
  r.absorb_rounding();
  return r;
}

Real sub(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_sub(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(const_cast<mpfr_ptr>(r.rad()), a.rad(), b.rad(), MPFR_RNDU);
  r.absorb_rounding();
  return r;
}

Real mul(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_mul(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  // |a||rb| + |b||ra| + ra*rb
  mpfr_t t, u;
  mpfr_init2(t, Real::kRadiusPrec);
  mpfr_init2(u, Real::kRadiusPrec);
  mpfr_abs(t, a.mid(), MPFR_RNDU);
  mpfr_mul(t, t, b.rad(), MPFR_RNDU);
  mpfr_abs(u, b.mid(), MPFR_RNDU);
  mpfr_mul(u, u, a.rad(), MPFR_RNDU);
  mpfr_add(t, t, u, MPFR_RNDU);
  mpfr_mul(u, a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(t, t, u, MPFR_RNDU);
  mpfr_set(const_cast<mpfr_ptr>(r.rad()), t, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(u);
  r.absorb_rounding();
  return r;
}

Real div(const Real& a, const Real& b) {
  if (b.contains_zero()) throw DomainError("division by a ball containing zero");
  Real r(join_prec(a, b));
  mpfr_div(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  // (ra + |q| rb) / (|bm| - rb)
  mpfr_t t, q, d;
  mpfr_init2(t, Real::kRadiusPrec);
  mpfr_init2(q, Real::kRadiusPrec);
  mpfr_init2(d, Real::kRadiusPrec);
  mpfr_abs(q, r.mid(), MPFR_RNDU);
  mpfr_mul(q, q, b.rad(), MPFR_RNDU);
  mpfr_add(q, q, a.rad(), MPFR_RNDU);
  mpfr_abs(d, b.mid(), MPFR_RNDD);
  mpfr_sub(d, d, b.rad(), MPFR_RNDD);
  mpfr_div(t, q, d, MPFR_RNDU);
  mpfr_set(const_cast<mpfr_ptr>(r.rad()), t, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(q);
  mpfr_clear(d);
  r.absorb_rounding();
  return r;
}

Real neg(const Real& a) {
  Real r(a);
  mpfr_neg(r.mid_mut(), r.mid(), MPFR_RNDN);
  return r;
}

Real abs_ball(const Real& a) {
  Real r(a);
  mpfr_abs(r.mid_mut(), r.mid(), MPFR_RNDN);
  return r;
}

Real add_si(const Real& a, long b) {
  Real r(a);
  mpfr_add_si(r.mid_mut(), a.mid(), b, MPFR_RNDN);
  r.absorb_rounding();
  return r;
}

Real mul_si(const Real& a, long b) {
  Real r(a);
  mpfr_mul_si(r.mid_mut(), a.mid(), b, MPFR_RNDN);
  mpfr_t t;
  mpfr_init2(t, Real::kRadiusPrec);
  mpfr_set_si(t, b < 0 ? -b : b, MPFR_RNDU);
  mpfr_mul(t, t, a.rad(), MPFR_RNDU);
  mpfr_set(const_cast<mpfr_ptr>(r.rad()), t, MPFR_RNDU);
  mpfr_clear(t);
  r.absorb_rounding();
  return r;
}

Real div_si(const Real& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  Real r(a);
  mpfr_div_si(r.mid_mut(), a.mid(), b, MPFR_RNDN);
  mpfr_t t;
  mpfr_init2(t, Real::kRadiusPrec);
  mpfr_div_si(t, a.rad(), b < 0 ? -b : b, MPFR_RNDU);
  mpfr_set(const_cast<mpfr_ptr>(r.rad()), t, MPFR_RNDU);
  mpfr_clear(t);
  r.absorb_rounding();
  return r;
}

Real mul_2exp(const Real& a, long e) {
  Real r(a);
  mpfr_mul_2si(r.mid_mut(), a.mid(), e, MPFR_RNDN);
  mpfr_mul_2si(const_cast<mpfr_ptr>(r.rad()), a.rad(), e, MPFR_RNDU);
  return r;
}

namespace {

// Ball image of a monotone function: evaluate at directed-rounded endpoints.
template <typename F>
Real monotone_ball(const Real& a, F&& op, const char* name, bool need_positive,
                   bool allow_zero = false) {
  mpfr_prec_t p = a.prec();
  if (need_positive) {
    Real lo = a.lower();
    int c = mpfr_sgn(lo.mid());
    if (c < 0 || (c == 0 && !allow_zero))
      throw DomainError(std::string(name) + ": argument ball not in domain");
  }
  Real r(p);
  mpfr_t lo, hi, flo, fhi;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  mpfr_init2(flo, p);
  mpfr_init2(fhi, p);
  mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
  mpfr_add(hi, a.mid(), a.rad(), MPFR_RNDU);
  op(flo, lo, MPFR_RNDD);
  op(fhi, hi, MPFR_RNDU);
  if (mpfr_cmp(flo, fhi) > 0) mpfr_swap(flo, fhi);  // decreasing branch
  mpfr_add(r.mid_mut(), flo, fhi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
  mpfr_t w;
  mpfr_init2(w, Real::kRadiusPrec);
  mpfr_sub(w, fhi, flo, MPFR_RNDU);
  mpfr_div_2ui(w, w, 1, MPFR_RNDU);
  mpfr_set(const_cast<mpfr_ptr>(r.rad()), w, MPFR_RNDU);
  mpfr_clear(w);
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpfr_clear(flo);
  mpfr_clear(fhi);
  r.absorb_rounding();
  r.grow_radius_2exp(mpfr_zero_p(r.mid()) ? -2 * (long)p
                                          : mpfr_get_exp(r.mid()) - (long)p);
  return r;
}

}  // namespace

Real sqrt_ball(const Real& a) {
  return monotone_ball(
      a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_sqrt(o, x, rnd); },
      "sqrt", true, true);
}

Real log_ball(const Real& a) {
  return monotone_ball(
      a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_log(o, x, rnd); },
      "log", true, false);
}

Real exp_ball(const Real& a) {
  return monotone_ball(
      a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_exp(o, x, rnd); },
      "exp", false);
}

Real expm1_ball(const Real& a) {
  return monotone_ball(
      a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_expm1(o, x, rnd); },
      "expm1", false);
}

Real pow_ball(const Real& base, const Real& expo) {
  if (expo.is_exact_integer() && mpfr_fits_slong_p(expo.mid(), MPFR_RNDN))
    return pow_si(base, expo.to_si());
  if (!base.is_positive())
    throw DomainError("pow: base ball must be strictly positive");
  return exp_ball(mul(expo, log_ball(base)));
}

Real pow_si(const Real& base, long e) {
  mpfr_prec_t p = base.prec();
  if (e == 0) return Real::from_si(1, p);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Real acc = Real::from_si(1, p);
  Real sq = base;
  while (n > 0) {
    if (n & 1ul) acc = mul(acc, sq);
    n >>= 1;
    if (n > 0) sq = mul(sq, sq);
  }
  if (inv) return div(Real::from_si(1, p), acc);
  return acc;
}

namespace {

// Bounded-derivative ball: f at midpoint, radius widened by rad * dbound.
template <typename F>
Real lipschitz_ball(const Real& a, F&& op) {
  Real r(a.prec());
  op(r.mid_mut(), a.mid(), MPFR_RNDN);
  mpfr_set(const_cast<mpfr_ptr>(r.rad()), a.rad(), MPFR_RNDU);  // |f'| <= 1
  r.absorb_rounding();
  return r;
}

}  // namespace

Real sin_ball(const Real& a) {
  return lipschitz_ball(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) {
    mpfr_sin(o, x, rnd);
  });
}

Real cos_ball(const Real& a) {
  return lipschitz_ball(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) {
    mpfr_cos(o, x, rnd);
  });
}

Real atan2_ball(const Real& y, const Real& x) {
  mpfr_prec_t p = join_prec(y, x);
  // Reject balls that touch the branch cut ambiguously: origin inside, or a
  // genuine y-interval straddling the negative real axis.
  mpfr_t hyp, rho;
  mpfr_init2(hyp, p);
  mpfr_init2(rho, Real::kRadiusPrec);
  mpfr_hypot(hyp, x.mid(), y.mid(), MPFR_RNDD);
  mpfr_sub(rho, hyp, x.rad(), MPFR_RNDD);
  mpfr_sub(rho, rho, y.rad(), MPFR_RNDD);
  if (mpfr_sgn(rho) <= 0) {
    mpfr_clear(hyp);
    mpfr_clear(rho);
    throw DomainError("atan2: ball contains the origin");
  }
  if (!y.rad_is_zero() && y.contains_zero() && mpfr_sgn(x.mid()) < 0) {
    mpfr_clear(hyp);
    mpfr_clear(rho);
    throw DomainError("atan2: ball straddles the branch cut");
  }
  Real r(p);
  mpfr_atan2(r.mid_mut(), y.mid(), x.mid(), MPFR_RNDN);
  mpfr_t w;
  mpfr_init2(w, Real::kRadiusPrec);
  mpfr_add(w, x.rad(), y.rad(), MPFR_RNDU);
  mpfr_div(w, w, rho, MPFR_RNDU);
  mpfr_set(const_cast<mpfr_ptr>(r.rad()), w, MPFR_RNDU);
  mpfr_clear(w);
  mpfr_clear(hyp);
  mpfr_clear(rho);
  r.absorb_rounding();
  return r;
}

bool definitely_less(const Real& a, const Real& b) {
  Real au = a.upper();
  Real bl = b.lower();
  return mpfr_cmp(au.mid(), bl.mid()) < 0;
}

bool definitely_greater(const Real& a, const Real& b) {
  return definitely_less(b, a);
}

bool agrees_within(const Real& a, const Real& b, const Real& tol) {
  Real d = sub(a, b);  // d.rad already carries rad(a) + rad(b)
  mpfr_t lim, ad;
  mpfr_init2(lim, Real::kRadiusPrec);
  mpfr_init2(ad, Real::kRadiusPrec);
  mpfr_add(lim, tol.mid(), d.rad(), MPFR_RNDU);
  mpfr_abs(ad, d.mid(), MPFR_RNDU);
  bool ok = mpfr_cmp(ad, lim) <= 0;
  mpfr_clear(lim);
  mpfr_clear(ad);
  return ok;
}

Real abs_diff(const Real& a, const Real& b) { return abs_ball(sub(a, b)); }

Real max_upper(const Real& a, const Real& b) {
  Real au = a.abs_upper();
  Real bu = b.abs_upper();
  return mpfr_cmp(au.mid(), bu.mid()) >= 0 ? au : bu;
}

}  // namespace dzeta
