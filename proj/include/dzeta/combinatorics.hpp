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

#ifndef DZETA_COMBINATORICS_HPP
#define DZETA_COMBINATORICS_HPP

#include <utility>

#include <gmpxx.h>

#include "dzeta/real.hpp"

namespace dzeta {

// Exact arithmetic backbone. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the Rational contract.
using Int = mpz_class;
using Rat = mpq_class;

Int binomial(long n, long k);
Int factorial(long n);

/// Exact value of the form log_coeff * log(n) + const_part at a fixed
/// positive integer n.
struct LogLinear {
  Rat log_coeff;
  Rat const_part;

  LogLinear() : log_coeff(0), const_part(0) {}
  LogLinear(Rat lc, Rat cp) : log_coeff(std::move(lc)), const_part(std::move(cp)) {}

  friend bool operator==(const LogLinear&, const LogLinear&) = default;
  LogLinear& operator+=(const LogLinear& o) {
    log_coeff += o.log_coeff;
    const_part += o.const_part;
    return *this;
  }
  LogLinear& operator-=(const LogLinear& o) {
    log_coeff -= o.log_coeff;
    const_part -= o.const_part;
    return *this;
  }
  LogLinear scaled(const Rat& c) const { return {log_coeff * c, const_part * c}; }

  // Numeric value given the n the pair refers to.
  Real eval(long n, mpfr_prec_t prec) const;
};

namespace combinatorics {

/// B_j in the convention B_1 = -1/2. Memoized; this sign convention is load
/// bearing for the Bernoulli-harmonic identities below.
Rat bernoulli(long j);

/// Stirling number of the second kind S(m, k); zero outside 0 <= k <= m.
Int stirling2(long m, long k);

/// Generalized harmonic number: sum of k^(-order) for k = 1..m; H_0 = 0.
Rat harmonic(long m, long order);

/// Sum of k^r for k = 1..n, by the Bernoulli-polynomial formula, cross-checked
/// against direct summation for small n.
Rat faulhaber(long n, long r);

/// The subtraction polynomial p(n, m) whose limit against sum k^m log k
/// defines the m-th log-constant; exact log-linear value at integer n >= 1.
/// For m = 0 the inner correction sum is empty.
LogLinear p_poly(long n, long m);

/// Bernoulli-harmonic convolution that vanishes identically for m >= 2:
/// sum_{j=0}^{m-1} [ (-1)^j/(m-j) + C(m,j) H_j ] B_j.
Rat bernoulli_harmonic_sum(long m);

/// Shifted variant, zero for m > k >= 1:
/// sum_{j=0}^{m-k} [ (-1)^j/((m-j-k+1)(j+k)) C(j+k,j)
///                   + C(m+1,k) C(m-k+1,j) H_{j+k-1}/(m+1) ] B_j.
Rat bernoulli_harmonic_sum_shifted(long m, long k);

/// Same sum without the (-1)^j twist; evaluates to -1/(m-k).
Rat bernoulli_harmonic_sum_shifted_raw(long m, long k);

/// Gap between the two sides of the binomial convolution identity
/// sum_{j<m} C(m,j) p(n,j) = (n+1)^m log n - log n/(m+1)
///                           - sum_{l=1..m} faulhaber(n, m-l)/l.
/// Returns (log-coefficient difference, constant-part difference); (0, 0)
/// when the identity holds.
std::pair<Rat, Rat> p_poly_binomial_gap(long n, long m);

}  // namespace combinatorics

Real rat_to_real(const Rat& q, mpfr_prec_t prec);

}  // namespace dzeta

#endif
