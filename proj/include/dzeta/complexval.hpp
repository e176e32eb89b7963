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

#ifndef DZETA_COMPLEXVAL_HPP
#define DZETA_COMPLEXVAL_HPP

#include "dzeta/real.hpp"

namespace dzeta {

/// Complex value with component-wise error containment.
struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex from_real(const Real& r) {
    Complex c(r.prec());
    c.re = r;
    return c;
  }
  static Complex from_si(long r, long i, mpfr_prec_t prec) {
    return Complex(Real::from_si(r, prec), Real::from_si(i, prec));
  }

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

Complex add(const Complex& a, const Complex& b);
Complex sub(const Complex& a, const Complex& b);
Complex mul(const Complex& a, const Complex& b);
Complex div(const Complex& a, const Complex& b);
Complex neg(const Complex& a);
Complex conj(const Complex& a);
Real abs_sq(const Complex& a);
Real abs_upper(const Complex& a);  // upper bound of |a|

Complex exp_c(const Complex& a);
// Principal logarithm, arg in (-pi, pi]. Errors if the ball touches 0 or
// straddles the branch cut with a genuine imaginary interval.
Complex log_c(const Complex& a);
// exp(expo * Log base) on the principal branch. base = 0 is a domain error.
Complex complex_power(const Complex& base, const Complex& expo);
// e^{i theta}
Complex cis(const Real& theta);

}  // namespace dzeta

#endif
