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

#ifndef DZETA_SERIES_HPP
#define DZETA_SERIES_HPP

#include <functional>

#include "dzeta/precision.hpp"
#include "dzeta/real.hpp"

namespace dzeta {

struct SeriesResult {
  Real value;
  long terms_used = 0;
  Real tail_bound;
  bool converged = false;

  explicit SeriesResult(mpfr_prec_t prec = 128) : value(prec), tail_bound(64) {}
};

using TermFn = std::function<Real(long)>;      // k -> term(k), k >= 1
using TailBoundFn = std::function<Real(long)>; // N -> bound on |sum_{k>N}|

/// Partial sum through the first N terms, with N the smallest index at which
/// the caller's tail bound drops below 10^(-decimal_digits). The tail bound
/// is folded into the result radius. If max_terms is reached first the result
/// comes back with converged = false and the bound achieved so far.
SeriesResult sum_series(const TermFn& term, const TailBoundFn& tail_bound,
                        const PrecisionContext& ctx);
SeriesResult sum_series(const TermFn& term, const TailBoundFn& tail_bound,
                        const PrecisionContext& ctx, const Real& epsilon);

using SequenceFn = std::function<Real(long)>;  // n -> value; n nondecreasing

/// Limit of partial_sum(n) - subtractor(n) as n -> infinity, for sequences
/// with an asymptotic error expansion in inverse powers of n, possibly with
/// log n factors. Extrapolates a geometric ladder n0, 2*n0, 4*n0, ... with
/// the decay order of each stage estimated from successive differences; a
/// log-bearing order simply gets eliminated twice. correction_order caps the
/// number of elimination stages.
///
/// The radius covers both the truncation in n and the expansion truncation,
/// via the contraction of the extrapolant diagonal. Throws ConvergenceError
/// ("limit did not stabilize") if the extrapolants never contract.
Real euler_maclaurin_limit(const SequenceFn& partial_sum,
                           const SequenceFn& subtractor, int correction_order,
                           const PrecisionContext& ctx);

struct LimitLadderOptions {
  long n0 = 64;
  int initial_levels = 8;
  double safety = 4.0;
};

Real euler_maclaurin_limit(const SequenceFn& partial_sum,
                           const SequenceFn& subtractor, int correction_order,
                           const PrecisionContext& ctx,
                           const LimitLadderOptions& opt);

}  // namespace dzeta

#endif
