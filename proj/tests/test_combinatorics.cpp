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

#include <vector>

#include "dzeta/combinatorics.hpp"

using namespace dzeta;
using namespace dzeta::combinatorics;

namespace {

// Independent oracle: solve the defining recurrence directly, no memo table.
Rat bernoulli_by_recurrence(long target) {
  std::vector<Rat> b = {Rat(1)};
  for (long k = 1; k <= target; ++k) {
    Rat acc(0);
    for (long j = 0; j < k; ++j) acc += Rat(binomial(k + 1, j)) * b[j];
    b.push_back(-acc / Rat(k + 1));
  }
  return b[target];
}

// Independent oracle: count partitions of {1..m} into exactly k nonempty
// blocks by brute-force enumeration of block assignments.
long stirling_by_enumeration(int m, int k) {
  long count = 0;
  std::vector<int> assign(m, 0);
  while (true) {
    int blocks = 0;
    for (int v : assign) blocks = std::max(blocks, v + 1);
    if (blocks == k) {
      // canonical labeling: block labels must appear in first-use order
      bool canonical = true;
      int seen = 0;
      for (int v : assign) {
        if (v > seen) {
          canonical = false;
          break;
        }
        if (v == seen) ++seen;
      }
      if (canonical) ++count;
    }
    int i = m - 1;
    while (i >= 0) {
      if (assign[i] < m - 1) {
        ++assign[i];
        break;
      }
      assign[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("bernoulli numbers: base cases and recurrence oracle") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(12) == bernoulli_by_recurrence(12));
  CHECK(bernoulli(12) == Rat(-691, 2730));
  for (long k = 1; k <= 60; ++k) {
    Rat acc(0);
    for (long j = 0; j <= k; ++j) acc += Rat(binomial(k + 1, j)) * bernoulli(j);
    CHECK(acc == 0);
  }
  for (long n = 1; n <= 30; ++n) CHECK(bernoulli(2 * n + 1) == 0);
}

TEST_CASE("stirling2 against brute-force set partitions") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 5) == 1);
  CHECK(stirling2(4, 2) == stirling_by_enumeration(4, 2));
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(3, 2) == 3);  // weights 3, 2 in 1 + 3 zeta(2) + 2 zeta(3)
  CHECK(stirling2(3, 3) == 1);
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= m; ++k)
      CHECK(stirling2(m, k) == stirling_by_enumeration(m, k));
  CHECK(stirling2(4, 6) == 0);
}

TEST_CASE("stirling2 defining polynomial identity") {
  for (long m = 0; m <= 15; ++m) {
    for (long x = 0; x <= m; ++x) {
      Rat rhs(0);
      for (long k = 0; k <= m; ++k)
        rhs += Rat(stirling2(m, k)) * Rat(factorial(k)) * Rat(binomial(x, k));
      Int xp;
      mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x),
                    static_cast<unsigned long>(m));
      CHECK(rhs == Rat(xp));
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0, 1) == 0);
  CHECK(harmonic(3, 1) == Rat(11, 6));
  CHECK(harmonic(2, 2) == Rat(5, 4));
  CHECK(harmonic(3, -1) == 6);   // 1 + 2 + 3
  CHECK(harmonic(2, -2) == 5);   // 1 + 4
}

TEST_CASE("faulhaber sums") {
  CHECK(faulhaber(7, 0) == 7);
  CHECK(faulhaber(10, 1) == 55);
  CHECK(faulhaber(10, 3) == 3025);  // direct-summation oracle runs internally
  for (long r = 0; r <= 12; ++r)
    for (long n : {1L, 13L, 57L, 100L}) {
      Rat direct(0);
      for (long k = 1; k <= n; ++k) {
        Int kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(r));
        direct += Rat(kp);
      }
      CHECK(faulhaber(n, r) == direct);
    }
}

TEST_CASE("p_poly low orders match their displayed forms") {
  for (long n : {1L, 2L, 5L, 17L}) {
    LogLinear p0 = p_poly(n, 0);
    CHECK(p0.log_coeff == Rat(n) + Rat(1, 2));
    CHECK(p0.const_part == Rat(-n));
    LogLinear p1 = p_poly(n, 1);
    CHECK(p1.log_coeff == Rat(n) * Rat(n) / 2 + Rat(n, 2) + Rat(1, 12));
    CHECK(p1.const_part == -Rat(n) * Rat(n) / 4);
  }
}

TEST_CASE("p_poly(4,2) against an independent transcription") {
  // Assemble the same definition with the summation order reversed and
  // binomial pieces expanded separately.
  long n = 4, m = 2;
  Rat nm1 = Rat(64);  // n^(m+1)
  Rat nm = Rat(16);   // n^m
  Rat log_c = nm1 / Rat(m + 1) + nm / 2;
  Rat const_c = -nm1 / Rat((m + 1) * (m + 1));
  // r = 2 contributes nothing (B_3 = 0); r = 1 contributes
  // m! B_2/2! * n/1! * (log n + 1/(m-1+1)) = (1/6) n (log n + 1/2)
  Rat w = Rat(factorial(m)) * bernoulli(2) / Rat(factorial(2)) * Rat(n);
  log_c += w;
  const_c += w * Rat(1, 2);
  LogLinear got = p_poly(n, m);
  CHECK(got.log_coeff == log_c);
  CHECK(got.const_part == const_c);
  CHECK(got.log_coeff == Rat(30));
  CHECK(got.const_part == Rat(-61, 9));
}

TEST_CASE("Bernoulli-harmonic convolution vanishes") {
  // m = 2 by hand: (1/2) B_0 + (-1 + 2 H_1) B_1 = 1/2 - 1/2 = 0.
  CHECK(bernoulli_harmonic_sum(2) == 0);
  CHECK(bernoulli_harmonic_sum(3) == 0);
  CHECK(bernoulli_harmonic_sum(10) == 0);
  for (long m = 2; m <= 60; ++m) CHECK(bernoulli_harmonic_sum(m) == 0);
}

TEST_CASE("shifted convolution vanishes and matches the k=1 reduction") {
  CHECK(bernoulli_harmonic_sum_shifted(2, 1) == 0);
  CHECK(bernoulli_harmonic_sum_shifted(5, 2) == 0);
  CHECK(bernoulli_harmonic_sum_shifted(8, 7) == 0);
  CHECK(bernoulli_harmonic_sum_shifted(2, 1) == bernoulli_harmonic_sum(2));
  for (long m = 2; m <= 40; ++m)
    for (long k = 1; k < m; ++k)
      CHECK(bernoulli_harmonic_sum_shifted(m, k) == 0);
  // The untwisted variant keeps the -1/(m-k) residue.
  for (long m = 2; m <= 20; ++m)
    for (long k = 1; k < m; ++k)
      CHECK(bernoulli_harmonic_sum_shifted_raw(m, k) ==
            Rat(-1, static_cast<unsigned long>(m - k)));
}

TEST_CASE("p_poly binomial convolution identity") {
  // n = 1, m = 1: lhs = p(1,0) = (3/2) log 1 - 1; rhs matches term by term.
  auto [dl, dc] = p_poly_binomial_gap(1, 1);
  CHECK(dl == 0);
  CHECK(dc == 0);
  auto [dl2, dc2] = p_poly_binomial_gap(5, 3);
  CHECK(dl2 == 0);
  CHECK(dc2 == 0);
  auto [dl3, dc3] = p_poly_binomial_gap(50, 12);
  CHECK(dl3 == 0);
  CHECK(dc3 == 0);
  for (long m = 1; m <= 20; ++m)
    for (long n : {1L, 2L, 3L, 7L, 20L, 50L}) {
      auto [a, b] = p_poly_binomial_gap(n, m);
      CHECK(a == 0);
      CHECK(b == 0);
    }
}

TEST_CASE("LogLinear evaluates numerically") {
  mpfr_prec_t p = 128;
  LogLinear v{Rat(2), Rat(-3)};
  Real got = v.eval(7, p);
  Real want = sub(mul_si(log_ball(Real::from_si(7, p)), 2), Real::from_si(3, p));
  CHECK(agrees_within(got, want, Real::ten_pow(-30, 64)));
}
