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

#ifndef DZETA_VERIFY_HPP
#define DZETA_VERIFY_HPP

#include <string>
#include <vector>

#include "dzeta/precision.hpp"

namespace dzeta {
namespace verify {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// One checked identity. Numeric cases pass when
/// |lhs - rhs| <= tolerance + rad(lhs) + rad(rhs); exact cases compare
/// rationals with tolerance zero. Values are kept as decimal strings so
/// reports never lose precision.
struct VerificationCase {
  std::string id;
  std::string statement;
  std::string lhs;
  std::string rhs;
  std::string abs_err;
  std::string tolerance;
  bool pass = false;
  long elapsed_ms = 0;

  friend bool operator==(const VerificationCase&,
                         const VerificationCase&) = default;
};

struct VerificationReport {
  std::string suite;
  int digits = 0;
  std::vector<VerificationCase> cases;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::string artifact_version = kArtifactVersion;

  void tally();
  std::string to_json() const;
  std::string to_csv() const;
  static VerificationReport from_json(const std::string& text);

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

/// Runs the named suite. Failing cases are recorded, never fatal; case order
/// is fixed. Known names: exact_identities, closed_forms, theorems_numeric,
/// functional_relation, oracles, trends, all.
VerificationReport run_suite(const std::string& name, int digits,
                             const PrecisionContext& ctx);

std::vector<std::string> suite_names();

/// Formats one value for the `compute` surface: midpoint to exactly `digits`
/// decimal places plus a radius annotation. kind selects the evaluator; see
/// the CLI grammar for the parameter names each kind expects.
struct ComputedValue {
  std::string midpoint;
  std::string radius;
  long terms_used = 0;
};
ComputedValue compute_value(const std::string& kind,
                            const std::vector<std::pair<std::string, std::string>>& params,
                            int digits, const PrecisionContext& ctx);

/// Named constant by the CLI grammar: gamma | A<m> | Aneg1:<a> | gamma1.
ComputedValue compute_constant(const std::string& name, int digits,
                               const PrecisionContext& ctx);

/// Grid table. Spec forms:
///   product:  "D: s1=1, s2=1, lam=1..4"
///   explicit: "gamma @ alpha,beta,mu: 1,0,1; 1,-1,1"
/// Each row carries the parameters, midpoint, radius and terms_used. format
/// is "json" or "csv".
std::string emit_table(const std::string& grid_spec, const std::string& format,
                       int digits, const PrecisionContext& ctx);

}  // namespace verify
}  // namespace dzeta

#endif
