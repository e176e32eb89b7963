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

#include "dzeta/verify.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "dzeta/constants.hpp"
#include "dzeta/dseries.hpp"
#include "dzeta/zetafun.hpp"

namespace dzeta {
namespace verify {

void VerificationReport::tally() {
  passed = failed = 0;
  for (const auto& c : cases) (c.pass ? passed : failed)++;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["digits"] = digits;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    j["cases"].push_back({{"id", c.id},
                          {"statement", c.statement},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"abs_err", c.abs_err},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass},
                          {"elapsed_ms", c.elapsed_ms}});
  }
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  j["artifact_version"] = artifact_version;
  return j.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.digits = j.at("digits").get<int>();
  for (const auto& cj : j.at("cases")) {
    VerificationCase c;
    c.id = cj.at("id").get<std::string>();
    c.statement = cj.at("statement").get<std::string>();
    c.lhs = cj.at("lhs").get<std::string>();
    c.rhs = cj.at("rhs").get<std::string>();
    c.abs_err = cj.at("abs_err").get<std::string>();
    c.tolerance = cj.at("tolerance").get<std::string>();
    c.pass = cj.at("pass").get<bool>();
    c.elapsed_ms = cj.at("elapsed_ms").get<long>();
    r.cases.push_back(std::move(c));
  }
  r.passed = j.at("summary").at("passed").get<long>();
  r.failed = j.at("summary").at("failed").get<long>();
  r.skipped = j.at("summary").at("skipped").get<long>();
  r.artifact_version = j.at("artifact_version").get<std::string>();
  return r;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "id,statement,lhs,rhs,abs_err,tolerance,pass,elapsed_ms\n";
  for (const auto& c : cases) {
    os << csv_escape(c.id) << ',' << csv_escape(c.statement) << ','
       << csv_escape(c.lhs) << ',' << csv_escape(c.rhs) << ','
       << csv_escape(c.abs_err) << ',' << csv_escape(c.tolerance) << ','
       << (c.pass ? "true" : "false") << ',' << c.elapsed_ms << "\n";
  }
  return os.str();
}

namespace {

long parse_index(const std::string& text, const std::string& name) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("unknown constant name: " + name +
                      " (expected gamma | A<m> | Aneg1:<a> | gamma1)");
  return value;
}

}  // namespace

ComputedValue compute_constant(const std::string& name, int digits,
                               const PrecisionContext& base_ctx) {
  PrecisionContext ctx(digits, base_ctx.guard_digits, base_ctx.max_terms);
  Real v(ctx.prec_bits());
  if (name == "gamma") {
    v = constants::euler_gamma(ctx);
  } else if (name == "gamma1") {
    v = constants::log_stieltjes_shift(0, ctx);
  } else if (name.size() > 6 && name.rfind("Aneg1:", 0) == 0) {
    v = constants::log_stieltjes_shift(parse_index(name.substr(6), name), ctx);
  } else if (name.size() > 1 && name[0] == 'A') {
    v = constants::log_bendersky(parse_index(name.substr(1), name), ctx);
  } else {
    throw DomainError("unknown constant name: " + name +
                      " (expected gamma | A<m> | Aneg1:<a> | gamma1)");
  }
  return {v.str(digits), v.radius_str(), 0};
}

ComputedValue compute_value(
    const std::string& kind,
    const std::vector<std::pair<std::string, std::string>>& params, int digits,
    const PrecisionContext& base_ctx) {
  PrecisionContext ctx(digits, base_ctx.guard_digits, base_ctx.max_terms);
  mpfr_prec_t prec = ctx.prec_bits();
  auto get = [&](const std::string& key) -> std::string {
    for (const auto& [k, val] : params)
      if (k == key) return val;
    throw DomainError("missing parameter '" + key + "' for kind " + kind);
  };
  auto get_real = [&](const std::string& key) {
    return Real::from_str(get(key), prec);
  };
  auto get_long = [&](const std::string& key) {
    std::string text = get(key);
    long value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw DomainError("parameter '" + key + "' must be an integer, got " +
                        text);
    return value;
  };

  if (kind == "D") {
    dseries::DParams p(get_real("s1"), get_real("s2"), get_real("lambda"));
    SeriesResult r = dseries::d_direct(p, ctx);
    if (!r.converged)
      throw ConvergenceError("series did not converge within max_terms");
    return {r.value.str(digits), r.value.radius_str(), r.terms_used};
  }
  if (kind == "gamma_general") {
    constants::GammaParams p(get_real("alpha"), get_long("beta"),
                             get_long("mu"));
    Real v = constants::gamma_general(p, ctx);
    return {v.str(digits), v.radius_str(), 0};
  }
  if (kind == "bendersky") {
    Real v = constants::log_bendersky(get_long("m"), ctx);
    return {v.str(digits), v.radius_str(), 0};
  }
  if (kind == "stieltjes_shift") {
    Real v = constants::log_stieltjes_shift(get_long("a"), ctx);
    return {v.str(digits), v.radius_str(), 0};
  }
  if (kind == "zeta") {
    Real v = zetafun::zeta(get_real("s"), ctx);
    return {v.str(digits), v.radius_str(), 0};
  }
  if (kind == "lerch") {
    Real v = zetafun::lerch(get_real("z"), get_real("s"), get_real("lambda"), ctx);
    return {v.str(digits), v.radius_str(), 0};
  }
  throw DomainError("unknown kind: " + kind);
}

}  // namespace verify
}  // namespace dzeta
