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

#ifndef DZETA_PRECISION_HPP
#define DZETA_PRECISION_HPP

#include <cmath>

#include <mpfr.h>

#include "dzeta/errors.hpp"

namespace dzeta {

/// Requested output precision plus internal slack, threaded through every
/// numeric operation. Working precision is decimal_digits + guard_digits and
/// is never reduced below that; individual algorithms may raise it locally.
struct PrecisionContext {
  int decimal_digits = 30;
  int guard_digits = 15;
  long max_terms = 10'000'000;

  PrecisionContext() = default;
  PrecisionContext(int digits, int guard = 15, long terms = 10'000'000)
      : decimal_digits(digits), guard_digits(guard), max_terms(terms) {
    validate();
  }

  void validate() const {
    if (decimal_digits < 1) throw DomainError("decimal_digits must be >= 1");
    if (guard_digits < 5) throw DomainError("guard_digits must be >= 5");
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  }

  int working_digits() const { return decimal_digits + guard_digits; }

  mpfr_prec_t prec_bits() const {
    // log2(10) = 3.3219...; add headroom for intermediate expressions.
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.3220)) + 16;
  }

  PrecisionContext with_digits(int digits) const {
    return PrecisionContext(digits, guard_digits, max_terms);
  }
  PrecisionContext with_extra_guard(int extra) const {
    return PrecisionContext(decimal_digits, guard_digits + extra, max_terms);
  }
  PrecisionContext with_max_terms(long terms) const {
    return PrecisionContext(decimal_digits, guard_digits, terms);
  }
};

}  // namespace dzeta

#endif
