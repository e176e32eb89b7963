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

#include <chrono>
#include <cmath>
#include <functional>

#include "dzeta/combinatorics.hpp"
#include "dzeta/constants.hpp"
#include "dzeta/dseries.hpp"
#include "dzeta/verify.hpp"
#include "dzeta/zetafun.hpp"

namespace dzeta {
namespace verify {

namespace {

using combinatorics::bernoulli;
using combinatorics::bernoulli_harmonic_sum;
using combinatorics::bernoulli_harmonic_sum_shifted;
using combinatorics::bernoulli_harmonic_sum_shifted_raw;
using combinatorics::faulhaber;
using combinatorics::harmonic;
using combinatorics::p_poly;
using combinatorics::p_poly_binomial_gap;
using combinatorics::stirling2;

class SuiteBuilder {
public:
  SuiteBuilder(VerificationReport& report, const PrecisionContext& ctx)
      : report_(report), ctx_(ctx) {}

  // Exact rational identity: passes iff value == expected.
  void exact_case(const std::string& id, const std::string& statement,
                  const std::function<Rat()>& value, const Rat& expected) {
    VerificationCase c;
    c.id = id;
    c.statement = statement;
    c.tolerance = "0";
    auto t0 = std::chrono::steady_clock::now();
    try {
      Rat v = value();
      c.lhs = v.get_str();
      c.rhs = expected.get_str();
      c.abs_err = Rat(v - expected).get_str();
      c.pass = (v == expected);
    } catch (const std::exception& e) {
      c.lhs = std::string("error: ") + e.what();
      c.rhs = expected.get_str();
      c.abs_err = "";
      c.pass = false;
    }
    finish(c, t0);
  }

  // Numeric identity at a decimal tolerance (ball radii included).
  void numeric_case(const std::string& id, const std::string& statement,
                    const std::function<std::pair<Real, Real>()>& sides,
                    int tol_digits) {
    VerificationCase c;
    c.id = id;
    c.statement = statement;
    Real tol = Real::ten_pow(-tol_digits, 64);
    c.tolerance = "1e-" + std::to_string(tol_digits);
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [lhs, rhs] = sides();
      c.lhs = lhs.str(report_.digits);
      c.rhs = rhs.str(report_.digits);
      Real err = abs_diff(lhs, rhs);
      char buf[64];
      mpfr_snprintf(buf, sizeof buf, "%.3Re", err.mid());
      c.abs_err = buf;
      c.pass = agrees_within(lhs, rhs, tol);
    } catch (const std::exception& e) {
      c.lhs = std::string("error: ") + e.what();
      c.rhs = "";
      c.abs_err = "";
      c.pass = false;
    }
    finish(c, t0);
  }

  // Plain predicate case (trend assertions and similar).
  void bool_case(const std::string& id, const std::string& statement,
                 const std::function<bool()>& pred) {
    VerificationCase c;
    c.id = id;
    c.statement = statement;
    c.tolerance = "0";
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.pass = pred();
      c.lhs = c.pass ? "true" : "false";
      c.rhs = "true";
      c.abs_err = "";
    } catch (const std::exception& e) {
      c.lhs = std::string("error: ") + e.what();
      c.rhs = "true";
      c.pass = false;
    }
    finish(c, t0);
  }

  const PrecisionContext& ctx() const { return ctx_; }

private:
  void finish(VerificationCase& c,
              std::chrono::steady_clock::time_point t0) {
    auto t1 = std::chrono::steady_clock::now();
    c.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report_.cases.push_back(std::move(c));
  }

  VerificationReport& report_;
  const PrecisionContext& ctx_;
};

// ---------------------------------------------------------------------------
// exact_identities: everything checked in rational arithmetic, tolerance 0.

void build_exact(SuiteBuilder& b) {
  for (long k = 1; k <= 60; ++k) {
    b.exact_case("bernoulli-recurrence/k=" + std::to_string(k),
                 "sum_{j<=k} C(k+1,j) B_j = 0",
                 [k] {
                   Rat acc(0);
                   for (long j = 0; j <= k; ++j)
                     acc += Rat(binomial(k + 1, j)) * bernoulli(j);
                   return acc;
                 },
                 Rat(0));
  }
  for (long n = 1; n <= 30; ++n) {
    b.exact_case("bernoulli-odd-zero/j=" + std::to_string(2 * n + 1),
                 "B_{2n+1} = 0 for n >= 1",
                 [n] { return bernoulli(2 * n + 1); }, Rat(0));
  }
  for (long m = 2; m <= 60; ++m) {
    b.exact_case("bernoulli-harmonic/m=" + std::to_string(m),
                 "sum_j [(-1)^j/(m-j) + C(m,j) H_j] B_j = 0",
                 [m] { return bernoulli_harmonic_sum(m); }, Rat(0));
  }
  for (long m = 2; m <= 40; ++m) {
    for (long k = 1; k < m; ++k) {
      b.exact_case("bernoulli-harmonic-shifted/m=" + std::to_string(m) +
                       ",k=" + std::to_string(k),
                   "shifted Bernoulli-harmonic convolution = 0",
                   [m, k] { return bernoulli_harmonic_sum_shifted(m, k); },
                   Rat(0));
    }
  }
  for (long m = 2; m <= 20; ++m) {
    for (long k = 1; k < m; ++k) {
      b.exact_case("bernoulli-harmonic-raw/m=" + std::to_string(m) +
                       ",k=" + std::to_string(k),
                   "untwisted convolution = -1/(m-k)",
                   [m, k] { return bernoulli_harmonic_sum_shifted_raw(m, k); },
                   Rat(-1, static_cast<unsigned long>(m - k)));
    }
  }
  for (long m = 1; m <= 20; ++m) {
    for (long n = 1; n <= 50; ++n) {
      b.exact_case(
          "p-poly-binomial/n=" + std::to_string(n) + ",m=" + std::to_string(m),
          "binomial convolution of p(n,.) matches its closed form",
          [n, m] {
            auto [dl, dc] = p_poly_binomial_gap(n, m);
            // encode the pair as one rational that is zero iff both vanish
            return dl * dl + dc * dc;
          },
          Rat(0));
    }
  }
  for (long m = 0; m <= 15; ++m) {
    b.exact_case("stirling-defining/m=" + std::to_string(m),
                 "x^m = sum_k S(m,k) k! C(x,k) for x = 0..m",
                 [m] {
                   Rat gap(0);
                   for (long x = 0; x <= m; ++x) {
                     Rat rhs(0);
                     for (long k = 0; k <= m; ++k)
                       rhs += Rat(stirling2(m, k)) * Rat(factorial(k)) *
                              Rat(binomial(x, k));
                     Int xp;
                     mpz_ui_pow_ui(xp.get_mpz_t(), x, m);
                     gap += Rat(xp) - rhs;
                   }
                   return gap;
                 },
                 Rat(0));
  }
  for (long r = 0; r <= 12; ++r) {
    b.exact_case("faulhaber-cross/r=" + std::to_string(r),
                 "power-sum formula matches direct summation, n <= 100",
                 [r] {
                   Rat gap(0);
                   for (long n = 1; n <= 100; ++n) {
                     Rat direct(0);
                     for (long k = 1; k <= n; ++k) {
                       Int kp;
                       mpz_ui_pow_ui(kp.get_mpz_t(), k, r);
                       direct += Rat(kp);
                     }
                     gap += faulhaber(n, r) - direct;
                   }
                   return gap;
                 },
                 Rat(0));
  }
  b.exact_case("harmonic/H0", "H_0 = 0", [] { return harmonic(0, 1); }, Rat(0));
  b.exact_case("harmonic/H3", "H_3 = 11/6", [] { return harmonic(3, 1); },
               Rat(11, 6));
  b.exact_case("harmonic/H2-order2", "H_2^(2) = 5/4",
               [] { return harmonic(2, 2); }, Rat(5, 4));
}

// ---------------------------------------------------------------------------
// closed_forms: symbolic reductions against direct summation.

std::pair<Real, Real> closed_vs_direct(const ClosedForm& f, long n, long m,
                                       long mu, const PrecisionContext& ctx) {
  return {dseries::d_direct(n, m, mu, ctx).value, f.eval(ctx)};
}

void build_closed_forms(SuiteBuilder& b) {
  const PrecisionContext& ctx = b.ctx();
  int tol = std::max(5, ctx.decimal_digits - 5);

  b.numeric_case("goldbach", "D(1,0;1) = 1",
                 [&] {
                   return std::pair<Real, Real>(
                       dseries::d_direct(1, 0, 1, ctx).value,
                       Real::from_si(1, ctx.prec_bits()));
                 },
                 tol);
  for (long n = 1; n <= 5; ++n) {
    for (long mu : {0L, 1L, 3L}) {
      b.numeric_case(
          "zeta-ladder/n=" + std::to_string(n) + ",mu=" + std::to_string(mu),
          "D(n,0;mu) = n - sum_{k=2..n} zeta(k)",
          [&, n, mu] {
            return closed_vs_direct(dseries::closed_form_s2_zero(n), n, 0, mu,
                                    ctx);
          },
          tol);
    }
  }
  for (long m = 0; m <= 5; ++m) {
    b.numeric_case(
        "stirling-closed/m=" + std::to_string(m),
        "D(1,-m;1) = 1 + sum (k-1)! S(m+1,k) zeta(k)",
        [&, m] {
          return closed_vs_direct(dseries::closed_form_negative_base(m), 1, -m,
                                  1, ctx);
        },
        tol);
  }
  for (long n = 1; n <= 5; ++n)
    for (long m = 0; m <= 5; ++m)
      for (long mu = 0; mu <= 5; ++mu) {
        b.numeric_case("reduction/n=" + std::to_string(n) +
                           ",m=" + std::to_string(m) +
                           ",mu=" + std::to_string(mu),
                       "D(n,-m;mu) reduced to base values",
                       [&, n, m, mu] {
                         return closed_vs_direct(
                             dseries::closed_form_reduce(n, m, mu), n, -m, mu,
                             ctx);
                       },
                       tol);
      }
  // The eight worked values with negative s2.
  struct Example {
    const char* id;
    long n, m, mu;
    ClosedForm expected;
  };
  std::vector<Example> ex;
  ex.push_back({"example-neg/D(1,0;1)", 1, 0, 1, ClosedForm(Rat(1))});
  {
    ClosedForm f(Rat(2));
    f.add_zeta(2, Rat(-1));
    ex.push_back({"example-neg/D(2,0;1)", 2, 0, 1, f});
  }
  {
    ClosedForm f(Rat(1));
    f.add_zeta(2, Rat(1));
    ex.push_back({"example-neg/D(1,-1;1)", 1, 1, 1, f});
  }
  {
    ClosedForm f(Rat(1));
    f.add_zeta(2, Rat(3));
    f.add_zeta(3, Rat(2));
    ex.push_back({"example-neg/D(1,-2;1)", 1, 2, 1, f});
  }
  {
    ClosedForm f(Rat(1));
    f.add_zeta(2, Rat(7));
    f.add_zeta(3, Rat(12));
    f.add_zeta(4, Rat(6));
    ex.push_back({"example-neg/D(1,-3;1)", 1, 3, 1, f});
  }
  ex.push_back({"example-neg/D(2,-1;1)", 2, 1, 1, ClosedForm(Rat(1))});
  {
    ClosedForm f;
    f.add_zeta(2, Rat(1));
    f.add_zeta(3, Rat(-1));
    ex.push_back({"example-neg/D(3,-1;1)", 3, 1, 1, f});
  }
  {
    ClosedForm f(Rat(5));
    f.add_zeta(2, Rat(-1));
    f.add_zeta(3, Rat(2));
    ex.push_back({"example-neg/D(2,-2;2)", 2, 2, 2, f});
  }
  for (const auto& e : ex) {
    b.bool_case(std::string(e.id) + "/symbolic",
                "reduction reproduces the tabulated coefficients",
                [&e] {
                  if (e.m == 0) return dseries::closed_form_s2_zero(e.n) == e.expected;
                  return dseries::closed_form_reduce(e.n, e.m, e.mu) ==
                         e.expected;
                });
    b.numeric_case(std::string(e.id) + "/numeric",
                   "tabulated value matches direct summation",
                   [&, e] {
                     return closed_vs_direct(e.expected, e.n, -e.m, e.mu, ctx);
                   },
                   tol);
  }
  // Index shifting, both branches, against direct evaluation.
  for (long n = 1; n <= 5; ++n)
    for (long mu = 1; mu <= 5; ++mu)
      for (long m : {-3L, -2L, -1L, 1L, 2L, 3L}) {
        b.numeric_case(
            "index-shift/n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                ",mu=" + std::to_string(mu),
            "D(n,m;mu) = D(shifted) - correction",
            [&, n, m, mu] {
              auto shift = dseries::index_shift(n, m, mu);
              Real lhs = dseries::d_direct(n, m, mu, ctx).value;
              Real rhs = sub(dseries::d_direct(shift.n1, m, shift.mu1, ctx).value,
                             shift.correction.eval(ctx));
              return std::pair<Real, Real>(lhs, rhs);
            },
            tol);
      }
  // gamma(n,-m;1) worked values.
  struct GEx {
    const char* id;
    long a, beta;
    ClosedForm expected;
  };
  std::vector<GEx> gex;
  gex.push_back({"gamma-closed/gamma(1,0;1)", 1, 0, ClosedForm(Rat(0))});
  {
    ClosedForm f;
    f.add_zeta(2, Rat(-1));
    gex.push_back({"gamma-closed/gamma(1,-1;1)", 1, -1, f});
  }
  gex.push_back({"gamma-closed/gamma(2,-1;1)", 2, -1, ClosedForm(Rat(0))});
  {
    ClosedForm f;
    f.add_zeta(3, Rat(-2));
    gex.push_back({"gamma-closed/gamma(2,-2;1)", 2, -2, f});
  }
  for (const auto& g : gex) {
    b.numeric_case(g.id, "closed form for gamma(n,-m;1)",
                   [&, g] {
                     Real lhs = constants::gamma_general(
                         constants::GammaParams::of(g.a, g.beta, 1,
                                                    ctx.prec_bits()),
                         ctx);
                     return std::pair<Real, Real>(lhs, g.expected.eval(ctx));
                   },
                   tol);
  }
  // The Euler ladder D(1,1;mu), mu = 1..4, against the Bendersky closed forms.
  for (long mu = 1; mu <= 4; ++mu) {
    b.numeric_case("euler-ladder/mu=" + std::to_string(mu),
                   "D(1,1;mu) = H_mu - gamma/mu - sum C(mu-1,j) log A_j",
                   [&, mu] {
                     Real lhs = dseries::d_direct(1, 1, mu, ctx).value;
                     Real rhs =
                         sub(rat_to_real(harmonic(mu, 1), ctx.prec_bits()),
                             constants::gamma_one_one_closed(mu, ctx));
                     return std::pair<Real, Real>(lhs, rhs);
                   },
                   std::min(tol, 20));
  }
}

// ---------------------------------------------------------------------------
// theorems_numeric: the two-branch evaluation, the Bendersky relation, the
// Stieltjes chain and the summed-over-m identities.

void build_theorems(SuiteBuilder& b) {
  const PrecisionContext& ctx = b.ctx();
  mpfr_prec_t prec = ctx.prec_bits();
  int tol = std::max(5, ctx.decimal_digits - 5);

  // Branch m = 0 plus mu-independence.
  for (long n = 1; n <= 4; ++n) {
    b.numeric_case("branch-zero/n=" + std::to_string(n),
                   "D(n,0;mu) is independent of mu and equals n - sum zeta",
                   [&, n] {
                     Real a = dseries::d_direct(n, 0, 0, ctx).value;
                     Real c = dseries::closed_form_s2_zero(n).eval(ctx);
                     return std::pair<Real, Real>(a, c);
                   },
                   tol);
    for (long mu : {1L, 2L, 5L}) {
      b.numeric_case("mu-independence/n=" + std::to_string(n) +
                         ",mu=" + std::to_string(mu),
                     "D(n,0;mu) = D(n,0;0)",
                     [&, n, mu] {
                       return std::pair<Real, Real>(
                           dseries::d_direct(n, 0, mu, ctx).value,
                           dseries::d_direct(n, 0, 0, ctx).value);
                     },
                     tol);
    }
  }
  // Branch m > 0: D(n,m;mu) = H_mu^(m) - gamma(n,m;mu).
  for (long n = 1; n <= 4; ++n)
    for (long m = 1; m <= 4; ++m)
      for (long mu = 0; mu <= 4; ++mu) {
        b.numeric_case(
            "branch-positive/n=" + std::to_string(n) + ",m=" +
                std::to_string(m) + ",mu=" + std::to_string(mu),
            "D(n,m;mu) = H_mu^(m) - gamma(n,m;mu)",
            [&, n, m, mu] {
              Real lhs = dseries::d_direct(n, m, mu, ctx).value;
              Real g = constants::gamma_general(
                  constants::GammaParams::of(n, m, mu, prec), ctx);
              Real rhs = sub(rat_to_real(harmonic(mu, m), prec), g);
              return std::pair<Real, Real>(lhs, rhs);
            },
            tol);
      }
  // gamma(1,1;mu) against the Bendersky combination.
  for (long mu = 1; mu <= 6; ++mu) {
    b.numeric_case("gamma-bendersky/mu=" + std::to_string(mu),
                   "gamma(1,1;mu) = gamma/mu + sum C(mu-1,j) log A_j",
                   [&, mu] {
                     Real lhs = constants::gamma_general(
                         constants::GammaParams::of(1, 1, mu, prec), ctx);
                     return std::pair<Real, Real>(
                         lhs, constants::gamma_one_one_closed(mu, ctx));
                   },
                   std::min(tol, 20));
  }
  // Stieltjes chain: three routes to D(1,1;0).
  b.numeric_case("stieltjes-chain/series-vs-alternating",
                 "D(1,1;0) = sum (-1)^l zeta'(l+1)",
                 [&] {
                   return std::pair<Real, Real>(
                       dseries::d_direct(1, 1, 0, ctx).value,
                       constants::zeta_prime_alternating_sum(ctx));
                 },
                 std::min(tol, 15));
  b.numeric_case("stieltjes-chain/series-vs-shift-difference",
                 "D(1,1;0) = log A_{-1}(0) - log A_{-1}(1)",
                 [&] {
                   Real rhs = sub(constants::log_stieltjes_shift(0, ctx),
                                  constants::log_stieltjes_shift(1, ctx));
                   return std::pair<Real, Real>(
                       dseries::d_direct(1, 1, 0, ctx).value, rhs);
                 },
                 std::min(tol, 15));
  b.numeric_case("stieltjes-chain/euler-value",
                 "D(2,1;1) = 1 - zeta(2) + gamma_1 - log A_{-1}(1)",
                 [&] {
                   ClosedForm f(Rat(1));
                   f.add_zeta(2, Rat(-1));
                   f.add_log_a_shift(0, Rat(1));
                   f.add_log_a_shift(1, Rat(-1));
                   return std::pair<Real, Real>(
                       dseries::d_direct(2, 1, 1, ctx).value, f.eval(ctx));
                 },
                 std::min(tol, 15));
  // Summed-over-m identities.
  for (long n = 1; n <= 2; ++n)
    for (long mu = 1; mu <= 3; ++mu)
      for (auto [vname, variant] :
           {std::pair<const char*, dseries::MSumVariant>{"plain",
                                                         dseries::MSumVariant::plain},
            {"alternating", dseries::MSumVariant::alternating},
            {"odd", dseries::MSumVariant::odd}}) {
        b.numeric_case("m-sum/" + std::string(vname) + "/n=" +
                           std::to_string(n) + ",mu=" + std::to_string(mu),
                       "summed D(n,m;mu) identity over m",
                       [&, n, mu, variant] {
                         return dseries::d_m_sum(n, mu, variant, ctx);
                       },
                       std::min(tol, 20));
      }
  // Tail-bound soundness of the direct series.
  b.bool_case("zeta-gap-bound", "0 < zeta(k) - 1 < 2^(2-k) for k = 2..60",
              [&] {
                for (long k = 2; k <= 60; ++k) {
                  Real zm1 = zetafun::zeta_minus_one(k, ctx);
                  if (!zm1.is_positive()) return false;
                  if (!definitely_less(zm1, Real::two_pow(2 - k, prec)))
                    return false;
                }
                return true;
              });
}

// ---------------------------------------------------------------------------
// functional_relation

void build_functional(SuiteBuilder& b) {
  const PrecisionContext& ctx = b.ctx();
  struct Point {
    double s1, s2, lam;
  };
  for (Point pt : {Point{4, -6, -0.5}, Point{3, -4, 0}, Point{5, -6, -0.25}}) {
    std::string tag = "s1=" + std::to_string((long)pt.s1) +
                      ",s2=" + std::to_string((long)pt.s2) +
                      ",lam=" + std::to_string(pt.lam);
    b.numeric_case("bilateral/" + tag,
                   "bilateral sum representation agrees with direct summation",
                   [&, pt] {
                     auto p = dseries::DParams::of(pt.s1, pt.s2, pt.lam,
                                                   ctx.prec_bits());
                     Complex rhs = dseries::d_functional_rhs(p, ctx);
                     return std::pair<Real, Real>(
                         dseries::d_direct(p, ctx).value, rhs.re);
                   },
                   6);
    b.numeric_case("bilateral-imag/" + tag, "imaginary part vanishes",
                   [&, pt] {
                     auto p = dseries::DParams::of(pt.s1, pt.s2, pt.lam,
                                                   ctx.prec_bits());
                     Complex rhs = dseries::d_functional_rhs(p, ctx);
                     return std::pair<Real, Real>(
                         rhs.im, Real::zero(ctx.prec_bits()));
                   },
                   6);
  }
}

// ---------------------------------------------------------------------------
// oracles: slow independent routes at reduced digits.

void build_oracles(SuiteBuilder& b) {
  // Oracle paths converge slowly; run them at reduced digits.
  PrecisionContext octx(std::min(b.ctx().decimal_digits, 12),
                        b.ctx().guard_digits, b.ctx().max_terms);
  const PrecisionContext& ctx = b.ctx();
  mpfr_prec_t prec = ctx.prec_bits();

  b.numeric_case("gamma-oracle", "series route = accelerated limit for gamma",
                 [&] {
                   return std::pair<Real, Real>(
                       constants::euler_gamma(ctx),
                       constants::euler_gamma_limit_oracle(ctx));
                 },
                 std::min(ctx.decimal_digits - 4, 24));
  b.numeric_case("gamma1-oracle",
                 "production gamma_1 = second limit configuration",
                 [&] {
                   return std::pair<Real, Real>(
                       constants::log_stieltjes_shift(0, ctx),
                       constants::stieltjes_gamma1_oracle(ctx));
                 },
                 10);
  b.numeric_case("stirling-constant", "log A_0 = log(2 pi)/2",
                 [&] {
                   Real half_log_2pi = mul_2exp(
                       log_ball(mul_2exp(Real::pi(prec), 1)), -1);
                   return std::pair<Real, Real>(constants::log_bendersky(0, ctx),
                                                half_log_2pi);
                 },
                 std::min(ctx.decimal_digits - 4, 24));
  b.numeric_case(
      "glaisher-inversion",
      "log A_1 from its limit = inversion through the mu=3 ladder value",
      [&] {
        // 2 log A_1 = 11/6 - gamma/3 - log A_0 - D(1,1;3)
        Real rhs = sub(
            sub(sub(rat_to_real(Rat(11, 6), prec),
                    div_si(constants::euler_gamma(ctx), 3)),
                constants::log_bendersky(0, ctx)),
            dseries::d_direct(1, 1, 3, ctx).value);
        return std::pair<Real, Real>(
            mul_si(constants::log_bendersky(1, ctx), 2), rhs);
      },
      std::min(ctx.decimal_digits - 4, 20));
  // Two-path agreement for the generalized constants (reduced digits).
  for (long alpha : {1L, 2L, 3L})
    for (long beta = -2; beta <= 2; ++beta)
      for (long mu = 0; mu <= 3; ++mu) {
        b.numeric_case("gamma-limit-path/alpha=" + std::to_string(alpha) +
                           ",beta=" + std::to_string(beta) +
                           ",mu=" + std::to_string(mu),
                       "defining limit agrees with the series route",
                       [&, alpha, beta, mu] {
                         auto p = constants::GammaParams::of(alpha, beta, mu,
                                                             octx.prec_bits());
                         Real fast = constants::gamma_general(p, octx);
                         Real slow = constants::gamma_general_by_limit(
                             p, 12000, octx);
                         return std::pair<Real, Real>(slow, fast);
                       },
                       5);
      }
  // Quadrature oracle for the integral representation.
  struct QP {
    double s1, s2, lam;
  };
  for (QP q : {QP{2, 1, 1}, QP{1, 0, 1}, QP{3, 2, 0.5}}) {
    b.numeric_case(
        "quadrature/s1=" + std::to_string((long)q.s1) + ",s2=" +
            std::to_string((long)q.s2) + ",lam=" + std::to_string(q.lam),
        "integral representation agrees with direct summation",
        [&, q] {
          auto p = dseries::DParams::of(q.s1, q.s2, q.lam, prec);
          return std::pair<Real, Real>(dseries::d_via_integral(p, ctx),
                                       dseries::d_direct(p, ctx).value);
        },
        8);
  }
  // Lerch decomposition of the double series. The n-sum only decays like
  // n^-3, so the cross-check runs at a fixed reduced tolerance.
  b.numeric_case("lerch-decomposition",
                 "D(3,2;1) = sum_n n^-4 Psi(1/n, 2, 2)",
                 [&] {
                   Real acc = Real::zero(prec);
                   const long cutoff = 20000;
                   for (long n = 2; n <= cutoff; ++n) {
                     Real nb = Real::from_si(n, prec);
                     Real psi = zetafun::lerch(
                         div(Real::from_si(1, prec), nb),
                         Real::from_si(2, prec), Real::from_si(2, prec), ctx);
                     acc = add(acc, mul(pow_si(nb, -4), psi));
                   }
                   // Psi(1/n,2,2) < zeta(2) - 1 < 0.65; integral comparison
                   // bounds the n > cutoff remainder by 0.65 cutoff^-3 / 3.
                   Real tb = div_si(
                       mul(Real::from_str("0.65", prec),
                           pow_si(Real::from_si(cutoff, prec), -3)),
                       3);
                   acc.grow_radius(tb.abs_upper());
                   return std::pair<Real, Real>(
                       dseries::d_direct(3, 2, 1, ctx).value, acc);
                 },
                 12);
}

// ---------------------------------------------------------------------------
// trends: limit-direction properties of gamma(n, m; mu).

void build_trends(SuiteBuilder& b) {
  const PrecisionContext& ctx = b.ctx();
  mpfr_prec_t prec = ctx.prec_bits();
  auto gamma_at = [&](long n, long m, long mu) {
    return constants::gamma_general(constants::GammaParams::of(n, m, mu, prec),
                                    ctx);
  };
  auto strictly_decreasing = [](const std::vector<Real>& devs) {
    for (size_t i = 0; i + 1 < devs.size(); ++i)
      if (!definitely_less(devs[i + 1].abs_upper(), devs[i].abs_lower()))
        return false;
    return true;
  };
  b.bool_case("trend-mu", "|gamma(2,2;mu) - zeta(2)| decreases, mu = 10..160",
              [&] {
                Real z2 = zetafun::zeta(2, ctx);
                std::vector<Real> devs;
                for (long mu : {10L, 20L, 40L, 80L, 160L})
                  devs.push_back(abs_ball(sub(gamma_at(2, 2, mu), z2)));
                return strictly_decreasing(devs);
              });
  b.bool_case("trend-n", "|gamma(n,2;3) - H_3^(2)| decreases, n = 2..16",
              [&] {
                Real h = rat_to_real(harmonic(3, 2), prec);
                std::vector<Real> devs;
                for (long n : {2L, 4L, 8L, 16L})
                  devs.push_back(abs_ball(sub(gamma_at(n, 2, 3), h)));
                return strictly_decreasing(devs);
              });
  b.bool_case("trend-m", "|gamma(2,m;3) - 1| decreases, m = 4..32",
              [&] {
                Real one = Real::from_si(1, prec);
                std::vector<Real> devs;
                for (long m : {4L, 8L, 16L, 32L})
                  devs.push_back(abs_ball(sub(gamma_at(2, m, 3), one)));
                return strictly_decreasing(devs);
              });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"exact_identities", "closed_forms", "theorems_numeric",
          "functional_relation", "oracles", "trends", "all"};
}

VerificationReport run_suite(const std::string& name, int digits,
                             const PrecisionContext& base_ctx) {
  if (digits < 10) throw DomainError("verification suites require digits >= 10");
  PrecisionContext ctx(digits, base_ctx.guard_digits, base_ctx.max_terms);
  VerificationReport report;
  report.suite = name;
  report.digits = digits;
  SuiteBuilder b(report, ctx);
  if (name == "exact_identities") {
    build_exact(b);
  } else if (name == "closed_forms") {
    build_closed_forms(b);
  } else if (name == "theorems_numeric") {
    build_theorems(b);
  } else if (name == "functional_relation") {
    build_functional(b);
  } else if (name == "oracles") {
    build_oracles(b);
  } else if (name == "trends") {
    build_trends(b);
  } else if (name == "all") {
    build_exact(b);
    build_closed_forms(b);
    build_theorems(b);
    build_functional(b);
    build_oracles(b);
    build_trends(b);
  } else {
    throw DomainError("unknown suite: " + name);
  }
  report.tally();
  return report;
}

}  // namespace verify
}  // namespace dzeta
