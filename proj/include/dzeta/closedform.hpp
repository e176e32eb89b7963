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

#ifndef DZETA_CLOSEDFORM_HPP
#define DZETA_CLOSEDFORM_HPP

#include <map>
#include <string>
#include <utility>

#include "dzeta/combinatorics.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/real.hpp"

namespace dzeta {

/// Exact symbolic combination
///   rational_part + sum c_k zeta(k) + gamma_coeff * gamma
///                 + sum c_m log A_m + sum c_a log A_{-1}(a),
/// comparable term by term and evaluable to a ball through the constants
/// module. log A_{-1}(0) is the first Stieltjes constant gamma_1.
struct ClosedForm {
  Rat rational_part;
  std::map<long, Rat> zeta_coeffs;  // k >= 2 -> coefficient of zeta(k)
  Rat gamma_coeff;
  std::map<long, Rat> log_a_coeffs;        // m >= 0 -> coefficient of log A_m
  std::map<long, Rat> log_a_shift_coeffs;  // a >= 0 -> coeff of log A_{-1}(a)

  ClosedForm() : rational_part(0), gamma_coeff(0) {}
  explicit ClosedForm(Rat r) : rational_part(std::move(r)), gamma_coeff(0) {}

  void add_zeta(long k, const Rat& c);
  void add_log_a(long m, const Rat& c);
  void add_log_a_shift(long a, const Rat& c);
  void add_scaled(const ClosedForm& other, const Rat& c);
  void prune();  // drop zero coefficients

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  Real eval(const PrecisionContext& ctx) const;
  std::string describe() const;
};

}  // namespace dzeta

#endif
