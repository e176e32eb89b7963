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

#include "dzeta/closedform.hpp"

#include <sstream>

#include "dzeta/constants.hpp"
#include "dzeta/zetafun.hpp"

namespace dzeta {

void ClosedForm::add_zeta(long k, const Rat& c) {
  if (k < 2) throw DomainError("zeta coefficient index must be >= 2");
  zeta_coeffs[k] += c;
}

void ClosedForm::add_log_a(long m, const Rat& c) {
  if (m < 0) throw DomainError("log A index must be >= 0");
  log_a_coeffs[m] += c;
}

void ClosedForm::add_log_a_shift(long a, const Rat& c) {
  if (a < 0) throw DomainError("log A_{-1} shift must be >= 0");
  log_a_shift_coeffs[a] += c;
}

void ClosedForm::add_scaled(const ClosedForm& other, const Rat& c) {
  rational_part += other.rational_part * c;
  gamma_coeff += other.gamma_coeff * c;
  for (const auto& [k, v] : other.zeta_coeffs) zeta_coeffs[k] += v * c;
  for (const auto& [m, v] : other.log_a_coeffs) log_a_coeffs[m] += v * c;
  for (const auto& [a, v] : other.log_a_shift_coeffs)
    log_a_shift_coeffs[a] += v * c;
}

void ClosedForm::prune() {
  std::erase_if(zeta_coeffs, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(log_a_coeffs, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(log_a_shift_coeffs,
                [](const auto& kv) { return kv.second == 0; });
}

Real ClosedForm::eval(const PrecisionContext& ctx) const {
  mpfr_prec_t p = ctx.prec_bits();
  Real acc = rat_to_real(rational_part, p);
  for (const auto& [k, c] : zeta_coeffs) {
    if (c == 0) continue;
    acc = add(acc, mul(rat_to_real(c, p), zetafun::zeta(k, ctx)));
  }
  if (gamma_coeff != 0)
    acc = add(acc, mul(rat_to_real(gamma_coeff, p), constants::euler_gamma(ctx)));
  for (const auto& [m, c] : log_a_coeffs) {
    if (c == 0) continue;
    acc = add(acc, mul(rat_to_real(c, p), constants::log_bendersky(m, ctx)));
  }
  for (const auto& [a, c] : log_a_shift_coeffs) {
    if (c == 0) continue;
    acc = add(acc,
              mul(rat_to_real(c, p), constants::log_stieltjes_shift(a, ctx)));
  }
  return acc;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rat& c,
                 const std::string& sym) {
  if (c == 0) return;
  Rat a = c > 0 ? c : Rat(-c);
  if (first) {
    if (c < 0) os << "-";
    first = false;
  } else {
    os << (c > 0 ? " + " : " - ");
  }
  if (sym.empty()) {
    os << a.get_str();
  } else if (a == 1) {
    os << sym;
  } else {
    os << a.get_str() << "*" << sym;
  }
}

}  // namespace

std::string ClosedForm::describe() const {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, rational_part, "");
  for (const auto& [k, c] : zeta_coeffs)
    append_term(os, first, c, "zeta(" + std::to_string(k) + ")");
  append_term(os, first, gamma_coeff, "gamma");
  for (const auto& [m, c] : log_a_coeffs)
    append_term(os, first, c, "logA" + std::to_string(m));
  for (const auto& [a, c] : log_a_shift_coeffs)
    append_term(os, first, c, "logAneg1(" + std::to_string(a) + ")");
  if (first) os << "0";
  return os.str();
}

}  // namespace dzeta
