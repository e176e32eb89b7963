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

#include "dzeta/constants.hpp"
#include "dzeta/dseries.hpp"
#include "dzeta/zetafun.hpp"

using namespace dzeta;
using namespace dzeta::dseries;

namespace {

const PrecisionContext kCtx(30);
const mpfr_prec_t kPrec = kCtx.prec_bits();

Real tol(int digits) { return Real::ten_pow(-digits, 64); }

}  // namespace

TEST_CASE("parameter gates") {
  CHECK_THROWS_AS(DParams::of(-1, 0, 1, kPrec), DomainError);
  CHECK_THROWS_AS(DParams::of(2, 0, -1.5, kPrec), DomainError);
  CHECK_THROWS_AS(DParams::of(2, 0, -1, kPrec), DomainError);
  CHECK_NOTHROW(DParams::of(2, -3, -0.5, kPrec));
}

TEST_CASE("direct summation reference values") {
  SeriesResult goldbach = d_direct(1, 0, 1, kCtx);
  CHECK(goldbach.converged);
  CHECK(agrees_within(goldbach.value, Real::from_si(1, kPrec), tol(28)));

  SeriesResult d201 = d_direct(2, 0, 1, kCtx);
  Real want = sub(Real::from_si(2, kPrec), zetafun::zeta(2L, kCtx));
  CHECK(agrees_within(d201.value, want, tol(28)));
  CHECK(agrees_within(d201.value,
                      Real::from_str("0.355065933151773563527584833354", kPrec),
                      tol(25)));

  // Euler's value through the accelerated-limit oracle for gamma.
  SeriesResult d111 = d_direct(1, 1, 1, kCtx);
  Real gamma = constants::euler_gamma_limit_oracle(kCtx);
  CHECK(agrees_within(d111.value, sub(Real::from_si(1, kPrec), gamma), tol(27)));
}

TEST_CASE("series metadata") {
  SeriesResult r = d_direct(1, 0, 1, kCtx);
  CHECK(r.terms_used > 50);
  CHECK(r.terms_used < 1000);
  CHECK(definitely_less(r.tail_bound, tol(29)));
  // tail-bound soundness under a doubled budget: rerun at higher digits and
  // compare midpoints
  PrecisionContext deeper(40);
  SeriesResult r2 = d_direct(1, 0, 1, deeper);
  Real shift = abs_diff(r.value, r2.value);
  CHECK(mpfr_cmp(shift.mid(), r.value.rad()) <= 0);
}

TEST_CASE("closed form for s2 = 0") {
  ClosedForm n1 = closed_form_s2_zero(1);
  CHECK(n1.rational_part == 1);
  CHECK(n1.zeta_coeffs.empty());
  ClosedForm n2 = closed_form_s2_zero(2);
  CHECK(n2.rational_part == 2);
  CHECK(n2.zeta_coeffs.at(2) == -1);
  ClosedForm n4 = closed_form_s2_zero(4);
  CHECK(n4.zeta_coeffs.size() == 3);
  for (long mu : {0L, 1L, 3L}) {
    Real direct = d_direct(4, 0, mu, kCtx).value;
    CHECK(agrees_within(direct, n4.eval(kCtx), tol(25)));
  }
}

TEST_CASE("closed form for negative s2 at the base point") {
  ClosedForm m1 = closed_form_negative_base(1);
  CHECK(m1.rational_part == 1);
  CHECK(m1.zeta_coeffs.at(2) == 1);
  ClosedForm m2 = closed_form_negative_base(2);
  CHECK(m2.zeta_coeffs.at(2) == 3);
  CHECK(m2.zeta_coeffs.at(3) == 2);
  ClosedForm m3 = closed_form_negative_base(3);
  CHECK(m3.zeta_coeffs.at(2) == 7);
  CHECK(m3.zeta_coeffs.at(3) == 12);
  CHECK(m3.zeta_coeffs.at(4) == 6);
  for (long m = 0; m <= 5; ++m) {
    Real direct = d_direct(1, -m, 1, kCtx).value;
    CHECK(agrees_within(direct, closed_form_negative_base(m).eval(kCtx),
                        tol(25)));
  }
}

TEST_CASE("binomial reduction reproduces the worked values") {
  ClosedForm a = closed_form_reduce(2, 1, 1);
  CHECK(a.rational_part == 1);
  CHECK(a.zeta_coeffs.empty());

  ClosedForm b = closed_form_reduce(3, 1, 1);
  CHECK(b.rational_part == 0);
  CHECK(b.zeta_coeffs.at(2) == 1);
  CHECK(b.zeta_coeffs.at(3) == -1);

  ClosedForm c = closed_form_reduce(2, 2, 2);
  CHECK(c.rational_part == 5);
  CHECK(c.zeta_coeffs.at(2) == -1);
  CHECK(c.zeta_coeffs.at(3) == 2);

  for (long n = 1; n <= 5; ++n)
    for (long m = 0; m <= 5; ++m)
      for (long mu = 0; mu <= 5; ++mu) {
        Real direct = d_direct(n, -m, mu, kCtx).value;
        Real closed = closed_form_reduce(n, m, mu).eval(kCtx);
        CHECK(agrees_within(direct, closed, tol(25)));
      }
}

TEST_CASE("index shifting") {
  // degenerate n = mu: both branches must produce the same correction
  auto s = index_shift(3, 2, 3);
  CHECK(s.n1 == 1);
  CHECK(s.mu1 == 1);
  Real lhs = d_direct(3, 2, 3, kCtx).value;
  Real rhs = sub(d_direct(1, 2, 1, kCtx).value, s.correction.eval(kCtx));
  CHECK(agrees_within(lhs, rhs, tol(25)));

  // empty correction when the shift is trivial
  auto t = index_shift(2, 1, 1);
  CHECK(t.n1 == 2);
  CHECK(t.mu1 == 1);
  CHECK(t.correction == ClosedForm{});

  // n < mu branch
  auto u = index_shift(1, 1, 3);
  CHECK(u.n1 == 1);
  CHECK(u.mu1 == 3);
  CHECK(u.correction == ClosedForm{});

  for (long n = 1; n <= 5; ++n)
    for (long mu = 1; mu <= 5; ++mu)
      for (long m : {-3L, -1L, 1L, 3L}) {
        auto sh = index_shift(n, m, mu);
        Real a = d_direct(n, m, mu, kCtx).value;
        Real b = sub(d_direct(sh.n1, m, sh.mu1, kCtx).value,
                     sh.correction.eval(kCtx));
        CHECK(agrees_within(a, b, tol(24)));
      }
}

TEST_CASE("mu independence at s2 = 0") {
  for (long n = 1; n <= 4; ++n) {
    Real base = d_direct(n, 0, 0, kCtx).value;
    for (long mu : {1L, 2L, 5L})
      CHECK(agrees_within(d_direct(n, 0, mu, kCtx).value, base, tol(27)));
  }
}

TEST_CASE("m>0 branch matches the harmonic/constant split") {
  for (long n = 1; n <= 4; ++n)
    for (long m = 1; m <= 4; ++m)
      for (long mu = 0; mu <= 4; ++mu) {
        Real lhs = d_direct(n, m, mu, kCtx).value;
        Real g = constants::gamma_general(
            constants::GammaParams::of(n, m, mu, kPrec), kCtx);
        Real h = rat_to_real(combinatorics::harmonic(mu, m), kPrec);
        CHECK(agrees_within(lhs, sub(h, g), tol(25)));
      }
}

TEST_CASE("summed-over-m identities") {
  for (long n : {1L, 2L})
    for (long mu : {1L, 2L, 3L}) {
      auto [p_lhs, p_rhs] = d_m_sum(n, mu, MSumVariant::plain, kCtx);
      CHECK(agrees_within(p_lhs, p_rhs, tol(20)));
      auto [a_lhs, a_rhs] = d_m_sum(n, mu, MSumVariant::alternating, kCtx);
      CHECK(agrees_within(a_lhs, a_rhs, tol(20)));
      auto [o_lhs, o_rhs] = d_m_sum(n, mu, MSumVariant::odd, kCtx);
      CHECK(agrees_within(o_lhs, o_rhs, tol(20)));
    }
}

TEST_CASE("quadrature oracle agrees with direct summation") {
  for (auto [s1, s2, lam] :
       {std::tuple{2.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {3.0, 2.0, 0.5}}) {
    auto p = DParams::of(s1, s2, lam, kPrec);
    Real integral = d_via_integral(p, kCtx);
    Real direct = d_direct(p, kCtx).value;
    CHECK(agrees_within(integral, direct, tol(8)));
  }
}

TEST_CASE("functional relation: validated base convention") {
  PrecisionContext ctx(20);
  mpfr_prec_t p = ctx.prec_bits();
  for (auto [s1, s2, lam] :
       {std::tuple{4.0, -6.0, -0.5}, {3.0, -4.0, 0.0}, {5.0, -6.0, -0.25}}) {
    auto dp = DParams::of(s1, s2, lam, p);
    Complex rhs = d_functional_rhs(dp, ctx);
    Real direct = d_direct(dp, ctx).value;
    CHECK(agrees_within(rhs.re, direct, tol(6)));
    CHECK(agrees_within(rhs.im, Real::zero(p), tol(6)));
  }
}

TEST_CASE("functional relation: base sign experiment") {
  // With the exponent 1 - s2 odd, flipping the base sign negates every term;
  // the literal minus-base convention lands on -D for real phase factors.
  // Recorded here so the validated convention is pinned by a test.
  PrecisionContext ctx(15);
  mpfr_prec_t p = ctx.prec_bits();
  auto dp = DParams::of(3.0, -4.0, 0.0, p);
  Real direct = d_direct(dp, ctx).value;
  Complex plus = d_functional_rhs(dp, ctx, BilateralBase::log_plus);
  Complex lit = d_functional_rhs(dp, ctx, BilateralBase::literal_minus);
  CHECK(agrees_within(plus.re, direct, tol(6)));
  CHECK(agrees_within(lit.re, neg(direct), tol(6)));
  CHECK_FALSE(agrees_within(lit.re, direct, tol(2)));
}

TEST_CASE("functional relation hypothesis gates") {
  CHECK_THROWS_AS(d_functional_rhs(DParams::of(1, -4, 0, kPrec), kCtx),
                  DomainError);  // s1 - lam not > 1
  CHECK_THROWS_AS(d_functional_rhs(DParams::of(4, 2, 0, kPrec), kCtx),
                  DomainError);  // s2 not negative
  CHECK_THROWS_AS(d_functional_rhs(DParams::of(4, -4, 0.5, kPrec), kCtx),
                  DomainError);  // lam outside (-1, 0]
}

TEST_CASE("zeta gap bound used by the tail analysis") {
  for (long k = 2; k <= 60; ++k) {
    Real zm1 = zetafun::zeta_minus_one(k, kCtx);
    CHECK(zm1.is_positive());
    CHECK(definitely_less(zm1, Real::two_pow(2 - k, kPrec)));
  }
}
