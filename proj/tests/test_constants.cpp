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

#include <filesystem>

#include "dzeta/constants.hpp"
#include "dzeta/dseries.hpp"
#include "dzeta/zetafun.hpp"

using namespace dzeta;
using namespace dzeta::constants;

namespace {

const PrecisionContext kCtx(30);
const mpfr_prec_t kPrec = kCtx.prec_bits();

Real tol(int digits) { return Real::ten_pow(-digits, 64); }

bool close_to(const Real& v, const std::string& decimal, int tol_digits) {
  return agrees_within(v, Real::from_str(decimal, v.prec()), tol(tol_digits));
}

}  // namespace

TEST_CASE("generalized constant production route") {
  // gamma(1,1;1) is the Euler-Mascheroni constant
  Real g = gamma_general(GammaParams::of(1, 1, 1, kPrec), kCtx);
  CHECK(close_to(g, "0.577215664901532860606512090082", 28));
  CHECK(agrees_within(g, euler_gamma_limit_oracle(kCtx), tol(26)));
  // gamma(1,0;1) = 0
  Real z = gamma_general(GammaParams::of(1, 0, 1, kPrec), kCtx);
  CHECK(agrees_within(z, Real::zero(kPrec), tol(27)));
  // gamma(2,-2;1) = -2 zeta(3)
  Real v = gamma_general(GammaParams::of(2, -2, 1, kPrec), kCtx);
  Real want = mul_si(zetafun::zeta(3L, kCtx), -2);
  CHECK(agrees_within(v, want, tol(25)));
  CHECK_THROWS_AS(GammaParams::of(0, 1, 1, kPrec), DomainError);
}

TEST_CASE("defining-limit oracle") {
  PrecisionContext octx(12);
  mpfr_prec_t p = octx.prec_bits();
  Real g = gamma_general_by_limit(GammaParams::of(1, 1, 1, p), 100000, octx);
  CHECK(close_to(g, "0.5772156649015328", 8));
  Real m1 = gamma_general_by_limit(GammaParams::of(1, -1, 1, p), 40000, octx);
  CHECK(agrees_within(m1, neg(zetafun::zeta(2L, octx)), tol(6)));
  Real c = gamma_general_by_limit(GammaParams::of(2, 1, 0, p), 40000, octx);
  Real want = neg(dseries::d_direct(2, 1, 0, octx).value);
  CHECK(agrees_within(c, want, tol(6)));
  CHECK_THROWS_AS(gamma_general_by_limit(GammaParams::of(1, 1, 1, p), 5, octx),
                  DomainError);
}

TEST_CASE("two-path agreement on the parameter grid") {
  PrecisionContext octx(10);
  mpfr_prec_t p = octx.prec_bits();
  for (long alpha : {1L, 2L, 3L})
    for (long beta = -2; beta <= 2; ++beta)
      for (long mu = 0; mu <= 3; ++mu) {
        auto params = GammaParams::of(alpha, beta, mu, p);
        Real fast = gamma_general(params, octx);
        Real slow = gamma_general_by_limit(params, 6000, octx);
        // agreement within the limit-path ball plus a fixed floor
        CHECK(agrees_within(slow, fast, tol(5)));
      }
}

TEST_CASE("Bendersky constants from the defining limit") {
  Real a0 = log_bendersky(0, kCtx);
  Real half_log_2pi = mul_2exp(log_ball(mul_2exp(Real::pi(kPrec), 1)), -1);
  CHECK(agrees_within(a0, half_log_2pi, tol(25)));
  CHECK(close_to(a0, "0.918938533204672741780329736406", 28));

  // log A_1 by inversion through the mu = 3 ladder value:
  // 2 log A_1 = 11/6 - gamma/3 - log A_0 - D(1,1;3)
  Real a1 = log_bendersky(1, kCtx);
  Real inv = sub(sub(sub(rat_to_real(Rat(11, 6), kPrec),
                         div_si(euler_gamma(kCtx), 3)),
                     a0),
                 dseries::d_direct(1, 1, 3, kCtx).value);
  CHECK(agrees_within(mul_si(a1, 2), inv, tol(22)));
  CHECK(close_to(a1, "0.248754477033784262547252993577", 25));

  // log A_2 through the mu = 4 ladder value:
  // D(1,1;4) = 25/12 - gamma/4 - log A_0 - 3 log A_1 - 3 log A_2
  Real a2 = log_bendersky(2, kCtx);
  Real lhs = dseries::d_direct(1, 1, 4, kCtx).value;
  Real rhs = sub(sub(sub(sub(rat_to_real(Rat(25, 12), kPrec),
                             div_si(euler_gamma(kCtx), 4)),
                         a0),
                     mul_si(a1, 3)),
                 mul_si(a2, 3));
  CHECK(agrees_within(lhs, rhs, tol(20)));
}

TEST_CASE("Stieltjes-type constants") {
  Real g1 = log_stieltjes_shift(0, kCtx);
  CHECK(close_to(g1, "-0.072815845483676724860586375875", 27));
  CHECK(agrees_within(g1, stieltjes_gamma1_oracle(kCtx), tol(10)));

  // a = 1 relates to D(1,1;0)
  Real s1 = log_stieltjes_shift(1, kCtx);
  Real want = sub(g1, dseries::d_direct(1, 1, 0, kCtx).value);
  CHECK(agrees_within(s1, want, tol(15)));

  Real self = sub(log_stieltjes_shift(0, kCtx), log_stieltjes_shift(0, kCtx));
  CHECK(self.contains_zero());
}

TEST_CASE("alternating zeta-prime sum") {
  Real v = zeta_prime_alternating_sum(kCtx);
  CHECK(agrees_within(v, dseries::d_direct(1, 1, 0, kCtx).value, tol(15)));
  Real chain = sub(log_stieltjes_shift(0, kCtx), log_stieltjes_shift(1, kCtx));
  CHECK(agrees_within(v, chain, tol(15)));
  // first partial: -zeta'(2)
  Real first = neg(zetafun::zeta_prime(2L, kCtx));
  CHECK(close_to(first, "0.937548254315843753702574094568", 27));
}

TEST_CASE("closed form for gamma(1,1;mu)") {
  Real g = euler_gamma(kCtx);
  CHECK(agrees_within(gamma_one_one_closed(1, kCtx), g, tol(28)));
  for (long mu = 1; mu <= 6; ++mu) {
    Real lhs = gamma_general(GammaParams::of(1, 1, mu, kPrec), kCtx);
    CHECK(agrees_within(lhs, gamma_one_one_closed(mu, kCtx), tol(20)));
  }
  // D(1,1;2) = 3/2 - gamma/2 - log A_0
  Real d112 = dseries::d_direct(1, 1, 2, kCtx).value;
  Real want = sub(sub(rat_to_real(Rat(3, 2), kPrec), div_si(g, 2)),
                  log_bendersky(0, kCtx));
  CHECK(agrees_within(d112, want, tol(20)));
}

TEST_CASE("limit-direction trends") {
  auto gamma_at = [&](long n, long m, long mu) {
    return gamma_general(GammaParams::of(n, m, mu, kPrec), kCtx);
  };
  Real z2 = zetafun::zeta(2L, kCtx);
  Real prev = abs_ball(sub(gamma_at(2, 2, 10), z2));
  for (long mu : {20L, 40L, 80L, 160L}) {
    Real cur = abs_ball(sub(gamma_at(2, 2, mu), z2));
    CHECK(definitely_less(cur.abs_upper(), prev.abs_lower()));
    prev = cur;
  }
  Real h32 = rat_to_real(combinatorics::harmonic(3, 2), kPrec);
  prev = abs_ball(sub(gamma_at(2, 2, 3), h32));
  for (long n : {4L, 8L, 16L}) {
    Real cur = abs_ball(sub(gamma_at(n, 2, 3), h32));
    CHECK(definitely_less(cur.abs_upper(), prev.abs_lower()));
    prev = cur;
  }
  Real one = Real::from_si(1, kPrec);
  prev = abs_ball(sub(gamma_at(2, 4, 3), one));
  for (long m : {8L, 16L, 32L}) {
    Real cur = abs_ball(sub(gamma_at(2, m, 3), one));
    CHECK(definitely_less(cur.abs_upper(), prev.abs_lower()));
    prev = cur;
  }
}

TEST_CASE("constant cache round trip") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "dzeta-cache-test";
  std::filesystem::remove_all(dir);
  Cache cache(dir);
  Real v = log_bendersky(0, kCtx);
  cache.store("A0", 30, v);
  auto hit = cache.load("A0", 30, kPrec);
  REQUIRE(hit.has_value());
  CHECK(mpfr_cmp(hit->mid(), v.mid()) == 0);  // lossless midpoint
  CHECK(mpfr_cmp(hit->rad(), v.rad()) >= 0);
  // a different digit request misses
  CHECK(!cache.load("A0", 40, kPrec).has_value());
  // radius re-verification: a deliberately loose value is refused
  Real loose = v;
  loose.grow_radius(Real::ten_pow(-5, 64));
  cache.store("A0", 30, loose);
  CHECK(!cache.load("A0", 30, kPrec).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("exact string round trip") {
  Real v = log_stieltjes_shift(0, kCtx);
  auto [mid, rad] = v.exact_strings();
  Real back = Real::from_exact_strings(mid, rad, v.prec());
  CHECK(mpfr_cmp(back.mid(), v.mid()) == 0);
}
