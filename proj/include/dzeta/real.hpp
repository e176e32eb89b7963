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

#ifndef DZETA_REAL_HPP
#define DZETA_REAL_HPP

#include <string>
#include <utility>

#include <gmp.h>
#include <mpfr.h>

#include "dzeta/errors.hpp"
#include "dzeta/precision.hpp"

namespace dzeta {

/// Error-tracked real number: an MPFR midpoint at the working precision plus
/// a nonnegative radius kept at low precision and always rounded upward, so
/// that the represented true value lies in [mid - rad, mid + rad].
///
/// Midpoint operations round to nearest; every operation widens the radius by
/// the propagated input radii plus a half-ulp bound on its own rounding.
class Real {
public:
  static constexpr mpfr_prec_t kRadiusPrec = 64;

  explicit Real(mpfr_prec_t prec = 128);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real zero(mpfr_prec_t prec);
  static Real from_si(long v, mpfr_prec_t prec);
  static Real from_double(double v, mpfr_prec_t prec);  // v taken exactly
  static Real from_mpq(mpq_srcptr q, mpfr_prec_t prec);
  // Decimal string; the ball accounts for the conversion rounding.
  static Real from_str(const std::string& s, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);
  static Real two_pow(long e, mpfr_prec_t prec);  // exact 2^e
  static Real ten_pow(long e, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }
  mpfr_ptr mid_mut() { return mid_; }

  bool rad_is_zero() const { return mpfr_zero_p(rad_); }
  void clear_radius() { mpfr_set_zero(rad_, 1); }
  // Enlarge the radius by |delta| (its own radius included).
  void grow_radius(const Real& delta);
  void grow_radius_2exp(long e);  // add 2^e
  // Add the half-ulp rounding bound of the current midpoint.
  void absorb_rounding();

  bool contains_zero() const;
  bool is_positive() const;  // entire ball > 0
  bool is_negative() const;
  // Exact integer ball (radius zero, integral midpoint).
  bool is_exact_integer() const;
  long to_si() const { return mpfr_get_si(mid_, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double radius_double() const;  // upper bound, never rounds to 0 unless 0

  // mid + rad rounded up / mid - rad rounded down, at midpoint precision.
  Real upper() const;
  Real lower() const;
  Real abs_upper() const;  // |mid| + rad, exact-radius result
  Real abs_lower() const;  // max(|mid| - rad, 0)

  std::string str(int decimal_places) const;
  std::string radius_str() const;
  // Lossless decimal round trip (midpoint and radius).
  std::pair<std::string, std::string> exact_strings() const;
  static Real from_exact_strings(const std::string& mid, const std::string& rad,
                                 mpfr_prec_t prec);

private:
  mpfr_t mid_;
  mpfr_t rad_;
};

// Arithmetic. Result precision is max of the operand precisions.
Real add(const Real& a, const Real& b);
Real sub(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);
Real div(const Real& a, const Real& b);  // throws if b may contain 0
Real neg(const Real& a);
Real abs_ball(const Real& a);
Real add_si(const Real& a, long b);
Real mul_si(const Real& a, long b);
Real div_si(const Real& a, long b);
Real mul_2exp(const Real& a, long e);

// Elementary functions with ball semantics.
Real sqrt_ball(const Real& a);   // requires a >= 0
Real log_ball(const Real& a);    // requires a > 0
Real exp_ball(const Real& a);
Real expm1_ball(const Real& a);
Real pow_ball(const Real& base, const Real& expo);  // requires base > 0
Real pow_si(const Real& base, long e);
Real sin_ball(const Real& a);
Real cos_ball(const Real& a);
Real atan2_ball(const Real& y, const Real& x);

// True when the orderings hold for every point of both balls.
bool definitely_less(const Real& a, const Real& b);
bool definitely_greater(const Real& a, const Real& b);
// |a - b| <= tol + rad(a) + rad(b), midpoints compared directly.
bool agrees_within(const Real& a, const Real& b, const Real& tol);
// Upper bound of |a - b| as a plain double (for reporting).
Real abs_diff(const Real& a, const Real& b);

Real max_upper(const Real& a, const Real& b);

}  // namespace dzeta

#endif
