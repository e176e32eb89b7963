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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dzeta/complexval.hpp"
#include "dzeta/quadrature.hpp"
#include "dzeta/series.hpp"
#include "dzeta/zetafun.hpp"

using namespace dzeta;

namespace {

bool close_to(const Real& v, const std::string& decimal, int tol_digits) {
  Real want = Real::from_str(decimal, v.prec());
  return agrees_within(v, want, Real::ten_pow(-tol_digits, 64));
}

double dbl(const Real& v) { return v.to_double(); }

}  // namespace

TEST_CASE("ball arithmetic contains exact results") {
  mpfr_prec_t p = 128;
  Real a = Real::from_str("1.25", p);
  Real b = Real::from_str("-0.5", p);
  CHECK(dbl(add(a, b)) == doctest::Approx(0.75));
  CHECK(dbl(mul(a, b)) == doctest::Approx(-0.625));
  CHECK(dbl(div(a, b)) == doctest::Approx(-2.5));
  CHECK(dbl(pow_si(b, 2)) == doctest::Approx(0.25));
  CHECK_THROWS_AS(div(a, sub(b, b)), DomainError);
  Real e = exp_ball(Real::from_si(1, p));
  CHECK(close_to(log_ball(e), "1", 30));
}

TEST_CASE("radius grows through cancellation but stays honest") {
  mpfr_prec_t p = 128;
  Real x = Real::from_str("0.1", p);  // inexact in binary: carries a radius
  Real y = sub(add(x, Real::from_si(1, p)), Real::from_si(1, p));
  CHECK(agrees_within(x, y, Real::zero(64)));
  CHECK(!y.rad_is_zero());
}

TEST_CASE("error containment across precision levels") {
  // The d-digit ball must contain the (d+10)-digit midpoint.
  for (int d : {20, 30, 40}) {
    PrecisionContext lo(d), hi(d + 10);
    auto expr = [](const PrecisionContext& ctx) {
      mpfr_prec_t p = ctx.prec_bits();
      Real x = Real::from_str("3.75", p);
      Real y = log_ball(add_si(sqrt_ball(x), 2));
      return div(exp_ball(y), Real::pi(p));
    };
    Real a = expr(lo);
    Real b = expr(hi);
    Real diff = abs_diff(a, b);
    CHECK(mpfr_cmp(diff.mid(), a.rad()) <= 0);
  }
}

TEST_CASE("sum_series geometric") {
  PrecisionContext ctx(30);
  mpfr_prec_t p = ctx.prec_bits();
  auto term = [p](long k) { return Real::two_pow(-k, p); };
  auto tail = [p](long n) { return Real::two_pow(-n, p); };
  SeriesResult r = sum_series(term, tail, ctx);
  CHECK(r.converged);
  CHECK(close_to(r.value, "1", 29));
  CHECK(r.terms_used < 200);
}

TEST_CASE("sum_series over zeta gaps reproduces the classical total") {
  PrecisionContext ctx(30);
  mpfr_prec_t p = ctx.prec_bits();
  auto term = [&](long k) { return zetafun::zeta_minus_one(k + 1, ctx); };
  auto tail = [p](long n) { return Real::two_pow(2 - n, p); };
  SeriesResult r = sum_series(term, tail, ctx);
  CHECK(r.converged);
  CHECK(close_to(r.value, "1", 28));
}

TEST_CASE("sum_series flags divergence at the term cap") {
  PrecisionContext ctx(30, 15, 20000);
  mpfr_prec_t p = ctx.prec_bits();
  auto term = [p](long k) { return div_si(Real::from_si(1, p), k); };
  auto tail = [p](long) { return Real::ten_pow(30, p); };  // no useful bound
  SeriesResult r = sum_series(term, tail, ctx);
  CHECK(!r.converged);
  CHECK(r.terms_used == 20000);
}

TEST_CASE("sum_series tail bound is sound under term doubling") {
  mpfr_prec_t p = PrecisionContext(30).prec_bits();
  auto term = [p](long k) { return Real::two_pow(-k, p); };
  auto tail = [p](long n) { return Real::two_pow(-n, p); };
  PrecisionContext short_ctx(30, 15, 40);
  PrecisionContext long_ctx(30, 15, 80);
  SeriesResult a = sum_series(term, tail, short_ctx, Real::ten_pow(-40, 64));
  SeriesResult b = sum_series(term, tail, long_ctx, Real::ten_pow(-40, 64));
  REQUIRE(!a.converged);
  Real shift = abs_diff(b.value, a.value);
  CHECK(mpfr_cmp(shift.mid(), a.tail_bound.mid()) < 0);
}

TEST_CASE("euler_maclaurin_limit recovers the harmonic-log limit") {
  PrecisionContext ctx(30);
  mpfr_prec_t p = ctx.with_extra_guard(10).prec_bits();
  Real running = Real::zero(p);
  long done = 0;
  SequenceFn ps = [&](long n) {
    for (long k = done + 1; k <= n; ++k)
      running = add(running, div_si(Real::from_si(1, p), k));
    done = n;
    return running;
  };
  SequenceFn sb = [p](long n) { return log_ball(Real::from_si(n, p)); };
  Real g = euler_maclaurin_limit(ps, sb, 16, ctx);
  CHECK(close_to(g, "0.577215664901532860606512090082", 28));
}

TEST_CASE("euler_maclaurin_limit recovers the Stirling constant") {
  PrecisionContext ctx(30);
  mpfr_prec_t p = ctx.with_extra_guard(12).prec_bits();
  Real running = Real::zero(p);
  long done = 0;
  SequenceFn ps = [&](long n) {
    for (long k = done + 1; k <= n; ++k)
      running = add(running, log_ball(Real::from_si(k, p)));
    done = n;
    return running;
  };
  SequenceFn sb = [p](long n) {
    Real nb = Real::from_si(n, p);
    Real ln = log_ball(nb);
    return sub(mul(add(nb, Real::from_str("0.5", p)), ln), nb);
  };
  Real v = euler_maclaurin_limit(ps, sb, 16, ctx);
  // Independent closed form: log(2 pi)/2.
  Real half_log_2pi = mul_2exp(log_ball(mul_2exp(Real::pi(p), 1)), -1);
  CHECK(agrees_within(v, half_log_2pi, Real::ten_pow(-25, 64)));
}

TEST_CASE("euler_maclaurin_limit on an already-converged sequence") {
  PrecisionContext ctx(30);
  mpfr_prec_t p = ctx.prec_bits();
  Real c = Real::from_str("2.718281828459045", p);
  SequenceFn ps = [c](long) { return c; };
  SequenceFn sb = [p](long) { return Real::zero(p); };
  Real v = euler_maclaurin_limit(ps, sb, 10, ctx);
  CHECK(agrees_within(v, c, Real::zero(64)));
}

TEST_CASE("euler_maclaurin_limit rejects divergent input") {
  PrecisionContext ctx(20);
  mpfr_prec_t p = ctx.prec_bits();
  Real running = Real::zero(p);
  long done = 0;
  SequenceFn ps = [&](long n) {  // harmonic numbers with no subtractor
    for (long k = done + 1; k <= n; ++k)
      running = add(running, div_si(Real::from_si(1, p), k));
    done = n;
    return running;
  };
  SequenceFn sb = [p](long) { return Real::zero(p); };
  CHECK_THROWS_AS(euler_maclaurin_limit(ps, sb, 12, ctx), ConvergenceError);
}

TEST_CASE("complex_power basics") {
  mpfr_prec_t p = PrecisionContext(30).prec_bits();
  // identity base
  Complex one = Complex::from_si(1, 0, p);
  Complex s(Real::from_str("2.5", p), Real::from_str("-1.25", p));
  Complex r = complex_power(one, s);
  CHECK(close_to(r.re, "1", 28));
  CHECK(close_to(r.im, "0", 28));
  // even power of a negative real
  Complex neg_e(neg(exp_ball(Real::from_si(1, p))), Real::zero(p));
  Complex sq = complex_power(neg_e, Complex::from_si(2, 0, p));
  Real e2 = exp_ball(Real::from_si(2, p));
  CHECK(agrees_within(sq.re, e2, Real::ten_pow(-28, 64)));
  CHECK(close_to(sq.im, "0", 28));
  // (2 pi i)^-1: oracle is the direct complex reciprocal 1/z = conj(z)/|z|^2
  Real two_pi = mul_2exp(Real::pi(p), 1);
  Complex z(Real::zero(p), two_pi);
  Complex inv = complex_power(z, Complex::from_si(-1, 0, p));
  Complex oracle = Complex(Real::zero(p), neg(div(Real::from_si(1, p), two_pi)));
  CHECK(agrees_within(inv.re, oracle.re, Real::ten_pow(-28, 64)));
  CHECK(agrees_within(inv.im, oracle.im, Real::ten_pow(-28, 64)));
  CHECK_THROWS_AS(
      complex_power(Complex::from_si(0, 0, p), Complex::from_si(-1, 0, p)),
      DomainError);
}

TEST_CASE("complex_power exponent laws on a sample grid") {
  mpfr_prec_t p = PrecisionContext(25).prec_bits();
  Real tol = Real::ten_pow(-22, 64);
  for (auto [re, im] : {std::pair{1.5, 0.0}, {-2.0, 0.5}, {0.0, 3.0}, {2.0, -7.0}}) {
    Complex b(Real::from_double(re, p), Real::from_double(im, p));
    Complex b1 = complex_power(b, Complex::from_si(1, 0, p));
    CHECK(agrees_within(b1.re, b.re, tol));
    CHECK(agrees_within(b1.im, b.im, tol));
    Complex b0 = complex_power(b, Complex::from_si(0, 0, p));
    CHECK(agrees_within(b0.re, Real::from_si(1, p), tol));
    CHECK(agrees_within(b0.im, Real::zero(p), tol));
    // general exponent and its negation multiply to one
    Complex s(Real::from_str("0.75", p), Real::from_str("0.5", p));
    Complex prod = mul(complex_power(b, s), complex_power(b, neg(s)));
    CHECK(agrees_within(prod.re, Real::from_si(1, p), tol));
    CHECK(agrees_within(prod.im, Real::zero(p), tol));
  }
}

TEST_CASE("integrate handles the exponential reference integrals") {
  PrecisionContext ctx(25);
  mpfr_prec_t p = ctx.prec_bits();
  Integrand f;
  f.sigma = 1.0;
  f.eval = [](const Real& t) { return exp_ball(neg(t)); };
  Real v = integrate(f, 1e-9, ctx);
  CHECK(agrees_within(v, Real::from_si(1, p), Real::ten_pow(-8, 64)));

  // t^(1/2) e^(-2t): closed form Gamma(3/2) / 2^(3/2)
  Integrand g;
  g.sigma = 1.5;
  g.eval = [p](const Real& t) {
    return mul(sqrt_ball(t), exp_ball(mul_si(t, -2)));
  };
  Real got = integrate(g, 1e-9, ctx);
  Real two_to_3_halves =
      exp_ball(mul_si(mul_2exp(log_ball(Real::from_si(2, p)), -1), 3));
  Real expect =
      div(zetafun::gamma_real(Real::from_str("1.5", p), ctx), two_to_3_halves);
  CHECK(agrees_within(got, expect, Real::ten_pow(-8, 64)));
}

TEST_CASE("integrate is linear") {
  PrecisionContext ctx(20);
  Integrand f;
  f.sigma = 1.0;
  f.eval = [](const Real& t) { return exp_ball(neg(t)); };
  Integrand g;
  g.sigma = 2.0;
  g.eval = [](const Real& t) { return mul(t, exp_ball(mul_si(t, -2))); };
  Integrand combo;
  combo.sigma = 1.0;
  combo.eval = [&](const Real& t) {
    return add(mul_si(f.eval(t), 3), mul_si(g.eval(t), -2));
  };
  Real lhs = integrate(combo, 1e-9, ctx);
  Real rhs = sub(mul_si(integrate(f, 1e-9, ctx), 3),
                 mul_si(integrate(g, 1e-9, ctx), 2));
  CHECK(agrees_within(lhs, rhs, Real::ten_pow(-7, 64)));
}

TEST_CASE("integrate rejects bad descriptors") {
  PrecisionContext ctx(20);
  Integrand f;
  f.sigma = -1.0;
  f.eval = [](const Real& t) { return t; };
  CHECK_THROWS_AS(integrate(f, 1e-8, ctx), DomainError);
}
