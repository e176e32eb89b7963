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

#include "dzeta/combinatorics.hpp"
#include "dzeta/zetafun.hpp"

using namespace dzeta;
using namespace dzeta::zetafun;

namespace {

const PrecisionContext kCtx(30);
const mpfr_prec_t kPrec = kCtx.prec_bits();

bool close_to(const Real& v, const std::string& decimal, int tol_digits) {
  return agrees_within(v, Real::from_str(decimal, v.prec()),
                       Real::ten_pow(-tol_digits, 64));
}

// Test-only oracle: plain partial sum plus the crude integral tail bound,
// at doubled precision. Slow but structurally independent of the production
// Euler-Maclaurin path.
Real zeta_by_direct_sum(long s, int digits) {
  PrecisionContext ctx(2 * digits);
  mpfr_prec_t p = ctx.prec_bits();
  Real acc = Real::zero(p);
  long n = 200000;
  for (long k = 1; k <= n; ++k)
    acc = add(acc, pow_si(Real::from_si(k, p), -s));
  // sum_{k>n} k^-s in [ integral_{n+1}, integral_n ]
  Real lo = div(pow_si(Real::from_si(n + 1, p), -(s - 1)),
                Real::from_si(s - 1, p));
  Real hi = div(pow_si(Real::from_si(n, p), -(s - 1)), Real::from_si(s - 1, p));
  Real mid = mul_2exp(add(lo, hi), -1);
  Real out = add(acc, mid);
  out.grow_radius(mul_2exp(sub(hi, lo), -1));
  return out;
}

}  // namespace

TEST_CASE("zeta at small integer arguments") {
  // zeta(2) = pi^2/6
  Real z2 = zeta(2L, kCtx);
  Real pi = Real::pi(kPrec);
  CHECK(agrees_within(z2, div_si(mul(pi, pi), 6), Real::ten_pow(-29, 64)));
  CHECK(agrees_within(z2, zeta_by_direct_sum(2, 18), Real::ten_pow(-12, 64)));
  Real z3 = zeta(3L, kCtx);
  CHECK(close_to(z3, "1.202056903159594285399738161511", 29));
  CHECK(agrees_within(z3, zeta_by_direct_sum(3, 18), Real::ten_pow(-14, 64)));
}

TEST_CASE("zeta deep in the dominated-tail zone") {
  Real z = zeta_minus_one(120L, kCtx);
  Real first = Real::two_pow(-120, kPrec);
  // the k = 3 term is below 3^-120 ~ 1e-58
  CHECK(agrees_within(z, first, Real::ten_pow(-55, 64)));
  CHECK(agrees_within(zeta(120L, kCtx), Real::from_si(1, kPrec),
                      Real::ten_pow(-30, 64)));
}

TEST_CASE("zeta domain gate") {
  CHECK_THROWS_AS(zeta(Real::from_str("0.5", kPrec), kCtx), DomainError);
  CHECK_THROWS_AS(zeta(1L, kCtx), DomainError);
}

TEST_CASE("hurwitz zeta coincidences") {
  for (double s : {2.0, 2.5, 3.0, 5.0, 10.0}) {
    Real sv = Real::from_double(s, kPrec);
    Real h1 = hurwitz_zeta(sv, Real::from_si(1, kPrec), kCtx);
    CHECK(agrees_within(h1, zeta(sv, kCtx), Real::ten_pow(-28, 64)));
    Real h2 = hurwitz_zeta(sv, Real::from_si(2, kPrec), kCtx);
    CHECK(agrees_within(h2, sub(zeta(sv, kCtx), Real::from_si(1, kPrec)),
                        Real::ten_pow(-28, 64)));
  }
  // doubling identity: zeta(s, 1/2) = (2^s - 1) zeta(s)
  Real h = hurwitz_zeta(Real::from_si(2, kPrec), Real::from_str("0.5", kPrec),
                        kCtx);
  Real want = mul_si(zeta(2L, kCtx), 3);
  CHECK(agrees_within(h, want, Real::ten_pow(-28, 64)));
  CHECK(close_to(h, "4.934802200544679309417245499939", 25));
}

TEST_CASE("zeta prime values and decay") {
  Real zp2 = zeta_prime(2L, kCtx);
  CHECK(close_to(zp2, "-0.937548254315843753702574094568", 28));
  // |zeta'(120)| is dominated by log 2 / 2^120 < 1e-35
  Real zp120 = zeta_prime(120L, kCtx);
  CHECK(definitely_less(abs_ball(zp120), Real::ten_pow(-35, kPrec)));
}

TEST_CASE("zeta prime agrees with a centered finite difference") {
  PrecisionContext hctx(45);
  mpfr_prec_t p = hctx.prec_bits();
  Real h = Real::ten_pow(-10, p);
  for (long s : {2L, 3L, 5L}) {
    Real sv = Real::from_si(s, p);
    Real fd = div(sub(zeta(add(sv, h), hctx), zeta(sub(sv, h), hctx)),
                  mul_2exp(h, 1));
    CHECK(agrees_within(zeta_prime(s, hctx), fd, Real::ten_pow(-15, 64)));
  }
}

TEST_CASE("polylog reference points") {
  // Li_1(1/5) telescopes to log 5 - log 4
  Real li = polylog(1, Real::from_str("0.2", kPrec), kCtx);
  Real want = sub(log_ball(Real::from_si(5, kPrec)),
                  log_ball(Real::from_si(4, kPrec)));
  CHECK(agrees_within(li, want, Real::ten_pow(-28, 64)));
  CHECK(close_to(li, "0.223143551314209755766295090310", 25));
  // empty sum
  Real z = polylog(3, Real::zero(kPrec), kCtx);
  CHECK(z.rad_is_zero());
  CHECK(mpfr_zero_p(z.mid()));
  // dilogarithm at 1/2 against its direct doubled-precision series
  Real li2 = polylog(2, Real::from_str("0.5", kPrec), kCtx);
  PrecisionContext dctx(60);
  Real acc = Real::zero(dctx.prec_bits());
  for (long k = 1; k <= 250; ++k)
    acc = add(acc, div(Real::two_pow(-k, dctx.prec_bits()),
                       Real::from_si(k * k, dctx.prec_bits())));
  CHECK(agrees_within(li2, acc, Real::ten_pow(-28, 64)));
  CHECK(close_to(li2, "0.582240526465012505902656320160", 28));
}

TEST_CASE("polylog equals -log(1-z) at order one") {
  for (const char* zs : {"0.5", "-0.5", "0.333333333333333333333333333333",
                         "0.9"}) {
    Real z = Real::from_str(zs, kPrec);
    Real lhs = polylog(1, z, kCtx);
    Real rhs = neg(log_ball(sub(Real::from_si(1, kPrec), z)));
    CHECK(agrees_within(lhs, rhs, Real::ten_pow(-27, 64)));
  }
}

TEST_CASE("polylog with negative order stays inside the disc") {
  // Li_{-1}(z) = z/(1-z)^2
  Real z = Real::from_str("0.25", kPrec);
  Real lhs = polylog(-1, z, kCtx);
  Real om = sub(Real::from_si(1, kPrec), z);
  Real rhs = div(z, mul(om, om));
  CHECK(agrees_within(lhs, rhs, Real::ten_pow(-27, 64)));
  CHECK_THROWS_AS(polylog(2, Real::from_si(1, kPrec), kCtx), DomainError);
}

TEST_CASE("lerch transcendent") {
  // only the m = 0 term survives at z = 0
  Real v = lerch(Real::zero(kPrec), Real::from_str("2.5", kPrec),
                 Real::from_str("3", kPrec), kCtx);
  Real want = pow_ball(Real::from_si(3, kPrec),
                       Real::from_str("-2.5", kPrec));
  CHECK(agrees_within(v, want, Real::ten_pow(-28, 64)));
  // sum (1/2)^m/(m+1) = 2 log 2
  Real w = lerch(Real::from_str("0.5", kPrec), Real::from_si(1, kPrec),
                 Real::from_si(1, kPrec), kCtx);
  CHECK(agrees_within(w, mul_2exp(log_ball(Real::from_si(2, kPrec)), 1),
                      Real::ten_pow(-28, 64)));
  CHECK_THROWS_AS(lerch(Real::from_str("0.5", kPrec), Real::from_si(1, kPrec),
                        Real::from_si(0, kPrec), kCtx),
                  DomainError);
}

TEST_CASE("lerch matches polylog at unit shift") {
  for (const char* zs : {"0.5", "-0.5", "0.9"}) {
    Real z = Real::from_str(zs, kPrec);
    for (long s : {1L, 2L, 3L}) {
      Real lhs = lerch(z, Real::from_si(s, kPrec), Real::from_si(1, kPrec),
                       kCtx);
      Real rhs = div(polylog(s, z, kCtx), z);
      CHECK(agrees_within(lhs, rhs, Real::ten_pow(-26, 64)));
    }
  }
}

TEST_CASE("gamma function on the positive axis") {
  CHECK(agrees_within(gamma_real(Real::from_si(2, kPrec), kCtx),
                      Real::from_si(1, kPrec), Real::zero(64)));
  for (long n : {1L, 2L, 5L, 9L}) {
    Real g = gamma_real(Real::from_si(n, kPrec), kCtx);
    CHECK(agrees_within(g, rat_to_real(Rat(factorial(n - 1)), kPrec),
                        Real::ten_pow(-28, 64)));
  }
  // Gamma(1/2) = sqrt(pi)
  Real gh = gamma_real(Real::from_str("0.5", kPrec), kCtx);
  CHECK(agrees_within(gh, sqrt_ball(Real::pi(kPrec)), Real::ten_pow(-28, 64)));
  CHECK(close_to(gh, "1.772453850905516027298167483341", 28));
  CHECK_THROWS_AS(gamma_real(Real::from_si(0, kPrec), kCtx), DomainError);
  CHECK_THROWS_AS(gamma_real(Real::from_si(-3, kPrec), kCtx), DomainError);
}

TEST_CASE("gamma recurrence across the shift zone") {
  for (double s : {0.25, 1.75, 6.5, 13.25, 19.5}) {
    Real sv = Real::from_double(s, kPrec);
    Real lhs = gamma_real(add_si(sv, 1), kCtx);
    Real rhs = mul(sv, gamma_real(sv, kCtx));
    CHECK(agrees_within(lhs, rhs, Real::ten_pow(-26, 64)));
  }
  // reflection branch
  Real g = gamma_real(Real::from_str("-0.5", kPrec), kCtx);
  Real want = mul_si(sqrt_ball(Real::pi(kPrec)), -2);
  CHECK(agrees_within(g, want, Real::ten_pow(-26, 64)));
}
