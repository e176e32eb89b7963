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

#include "dzeta/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace dzeta {

Int binomial(long n, long k) {
  if (k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Real rat_to_real(const Rat& q, mpfr_prec_t prec) {
  return Real::from_mpq(q.get_mpq_t(), prec);
}

Real LogLinear::eval(long n, mpfr_prec_t prec) const {
  if (n < 1) throw DomainError("LogLinear::eval requires n >= 1");
  Real logn = log_ball(Real::from_si(n, prec));
  return add(mul(rat_to_real(log_coeff, prec), logn), rat_to_real(const_part, prec));
}

namespace combinatorics {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rat>& bernoulli_table() {
  static std::vector<Rat> table = {Rat(1), Rat(-1, 2)};
  return table;
}

std::mutex g_stirling_mutex;
std::vector<std::vector<Int>>& stirling_rows() {
  static std::vector<std::vector<Int>> rows = {{Int(1)}};  // S(0,0) = 1
  return rows;
}

}  // namespace

Rat bernoulli(long j) {
  if (j < 0) throw DomainError("bernoulli index must be >= 0");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  auto& table = bernoulli_table();
  // sum_{i=0}^{k} C(k+1, i) B_i = 0 solved for B_k.
  while (static_cast<long>(table.size()) <= j) {
    long k = static_cast<long>(table.size());
    Rat acc(0);
    for (long i = 0; i < k; ++i) acc += Rat(binomial(k + 1, i)) * table[i];
    acc /= Rat(binomial(k + 1, k));
    table.push_back(-acc);
  }
  return table[j];
}

Int stirling2(long m, long k) {
  if (m < 0 || k < 0) throw DomainError("stirling2 indices must be >= 0");
  if (k > m) return Int(0);
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  auto& rows = stirling_rows();
  // S(m,k) = k S(m-1,k) + S(m-1,k-1), filled row by row.
  while (static_cast<long>(rows.size()) <= m) {
    long mm = static_cast<long>(rows.size());
    const auto& prev = rows.back();
    std::vector<Int> row(mm + 1);
    row[0] = 0;
    for (long kk = 1; kk <= mm; ++kk) {
      Int a = (kk < static_cast<long>(prev.size())) ? prev[kk] : Int(0);
      const Int& b = prev[kk - 1];
      row[kk] = Int(kk) * a + b;
    }
    rows.push_back(std::move(row));
  }
  return rows[m][k];
}

Rat harmonic(long m, long order) {
  if (m < 0) throw DomainError("harmonic requires m >= 0");
  Rat acc(0);
  for (long k = 1; k <= m; ++k) {
    Int kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(order < 0 ? -order : order));
    if (order >= 0)
      acc += Rat(1) / Rat(kp);
    else
      acc += Rat(kp);
  }
  return acc;
}

namespace {

Rat faulhaber_formula(long n, long r) {
  // sum_{k<=n} k^r = ( sum_{i=0}^{r} C(r+1, i) B_i n^{r+1-i} ) / (r+1),
  // with B_1 entering as +1/2 (upper-limit convention).
  Rat acc(0);
  for (long i = 0; i <= r; ++i) {
    Rat b = bernoulli(i);
    if (i == 1) b = -b;
    Int np;
    mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(r + 1 - i));
    acc += Rat(binomial(r + 1, i)) * b * Rat(np);
  }
  return acc / Rat(r + 1);
}

Rat faulhaber_direct(long n, long r) {
  Rat acc(0);
  for (long k = 1; k <= n; ++k) {
    Int kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(r));
    acc += Rat(kp);
  }
  return acc;
}

}  // namespace

Rat faulhaber(long n, long r) {
  if (n < 1 || r < 0) throw DomainError("faulhaber requires n >= 1, r >= 0");
  Rat f = faulhaber_formula(n, r);
  if (n <= 200) {
    Rat d = faulhaber_direct(n, r);
    if (d != f)
      throw InvariantError("faulhaber: formula and direct sum disagree");
  }
  return f;
}

LogLinear p_poly(long n, long m) {
  if (n < 1 || m < 0) throw DomainError("p_poly requires n >= 1, m >= 0");
  Int npow;  // n^(m+1)
  mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(m + 1));
  Int nm;  // n^m
  mpz_ui_pow_ui(nm.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(m));
  LogLinear p;
  p.log_coeff = Rat(npow) / Rat(m + 1) + Rat(nm) / 2;
  p.const_part = -Rat(npow) / (Rat(m + 1) * Rat(m + 1));
  Rat mfact(factorial(m));
  for (long r = 1; r <= m; ++r) {
    Int nmr;  // n^(m-r)
    mpz_ui_pow_ui(nmr.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(m - r));
    Rat w = mfact * bernoulli(r + 1) / Rat(factorial(r + 1)) * Rat(nmr) /
            Rat(factorial(m - r));
    p.log_coeff += w;
    if (r != m) {
      Rat inner(0);
      for (long i = 1; i <= r; ++i) inner += Rat(1) / Rat(m - i + 1);
      p.const_part += w * inner;
    }
  }
  return p;
}

Rat bernoulli_harmonic_sum(long m) {
  if (m < 2) throw DomainError("bernoulli_harmonic_sum requires m >= 2");
  Rat acc(0);
  for (long j = 0; j <= m - 1; ++j) {
    Rat first = Rat(1) / Rat(m - j);
    if (j % 2 == 1) first = -first;
    Rat second = Rat(binomial(m, j)) * harmonic(j, 1);
    acc += (first + second) * bernoulli(j);
  }
  return acc;
}

namespace {

Rat shifted_term(long m, long k, long j, bool alternating) {
  Rat first = Rat(binomial(j + k, j)) / (Rat(m - j - k + 1) * Rat(j + k));
  if (alternating && j % 2 == 1) first = -first;
  Rat second = Rat(binomial(m + 1, k)) * Rat(binomial(m - k + 1, j)) *
               harmonic(j + k - 1, 1) / Rat(m + 1);
  return (first + second) * bernoulli(j);
}

}  // namespace

Rat bernoulli_harmonic_sum_shifted(long m, long k) {
  if (!(m > k && k >= 1))
    throw DomainError("bernoulli_harmonic_sum_shifted requires m > k >= 1");
  Rat acc(0);
  for (long j = 0; j <= m - k; ++j) acc += shifted_term(m, k, j, true);
  return acc;
}

Rat bernoulli_harmonic_sum_shifted_raw(long m, long k) {
  if (!(m > k && k >= 1))
    throw DomainError("bernoulli_harmonic_sum_shifted_raw requires m > k >= 1");
  Rat acc(0);
  for (long j = 0; j <= m - k; ++j) acc += shifted_term(m, k, j, false);
  return acc;
}

std::pair<Rat, Rat> p_poly_binomial_gap(long n, long m) {
  if (n < 1 || m < 1) throw DomainError("p_poly_binomial_gap requires n, m >= 1");
  LogLinear lhs;
  for (long j = 0; j <= m - 1; ++j)
    lhs += p_poly(n, j).scaled(Rat(binomial(m, j)));
  Int np1;  // (n+1)^m
  mpz_ui_pow_ui(np1.get_mpz_t(), static_cast<unsigned long>(n + 1),
                static_cast<unsigned long>(m));
  LogLinear rhs;
  rhs.log_coeff = Rat(np1) - Rat(1) / Rat(m + 1);
  for (long l = 1; l <= m; ++l) rhs.const_part -= faulhaber(n, m - l) / Rat(l);
  return {lhs.log_coeff - rhs.log_coeff, lhs.const_part - rhs.const_part};
}

}  // namespace combinatorics
}  // namespace dzeta
