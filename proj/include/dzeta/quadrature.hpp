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

#ifndef DZETA_QUADRATURE_HPP
#define DZETA_QUADRATURE_HPP

#include <functional>

#include "dzeta/precision.hpp"
#include "dzeta/real.hpp"

namespace dzeta {

/// Integrand over (0, inf) behaving like t^(sigma-1) at zero (sigma > 0) and
/// decaying exponentially at infinity.
struct Integrand {
  std::function<Real(const Real&)> eval;
  double sigma = 1.0;
};

/// Estimate of the improper integral with radius <= tol. Splits at t = 1:
/// a tanh-sinh (double-exponential) rule absorbs the endpoint singularity on
/// (0, 1], a step-refined exponential-decay grid covers [1, inf). Throws
/// DomainError for sigma <= 0 and ConvergenceError if the tolerance is not
/// reached within the subdivision caps (the message carries the achieved
/// bound).
Real integrate(const Integrand& f, double tol, const PrecisionContext& ctx);

}  // namespace dzeta

#endif
