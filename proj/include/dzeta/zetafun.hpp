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

#ifndef DZETA_ZETAFUN_HPP
#define DZETA_ZETAFUN_HPP

#include "dzeta/complexval.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/real.hpp"

namespace dzeta {
namespace zetafun {

/// Riemann zeta for real s > 1, by Euler-Maclaurin with the term count and
/// Bernoulli correction depth chosen from the working precision.
Real zeta(const Real& s, const PrecisionContext& ctx);
Real zeta(long s, const PrecisionContext& ctx);  // memoized integer arguments

/// zeta(s) - 1 computed as the shifted sum over k >= 2, which keeps full
/// absolute accuracy when the value itself is tiny.
Real zeta_minus_one(const Real& s, const PrecisionContext& ctx);
Real zeta_minus_one(long s, const PrecisionContext& ctx);  // memoized

/// Hurwitz zeta, s > 1, a > 0.
Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx);

/// zeta'(s) = -sum log k / k^s for s > 1, Euler-Maclaurin accelerated.
Real zeta_prime(const Real& s, const PrecisionContext& ctx);
Real zeta_prime(long s, const PrecisionContext& ctx);  // memoized

/// Polylogarithm Li_s(z) for integer order and |z| < 1.
Real polylog(long s, const Real& z, const PrecisionContext& ctx);

/// Lerch transcendent: sum_{m>=0} z^m (m+lam)^(-s), |z| < 1, lam > 0.
Real lerch(const Real& z, const Real& s, const Real& lam,
           const PrecisionContext& ctx);
Complex lerch(const Real& z, const Complex& s, const Real& lam,
              const PrecisionContext& ctx);

/// Gamma function for real s away from the poles at nonpositive integers,
/// via argument shifting into a Stirling-series zone.
Real gamma_real(const Real& s, const PrecisionContext& ctx);

}  // namespace zetafun
}  // namespace dzeta

#endif
