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

// Command-line front end. Talks to the engine exclusively through the C API
// in dzeta.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dzeta.h"

namespace {

struct CtxDeleter {
  void operator()(dz_ctx* c) const { dz_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<dz_ctx, CtxDeleter>;

struct StrDeleter {
  void operator()(char* s) const { dz_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

int report_error(dz_status st, char* errmsg) {
  StrPtr owned(errmsg);
  std::cerr << "error: " << (errmsg ? errmsg : "unknown failure") << "\n";
  return static_cast<int>(st);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dzeta - Dirichlet series and generalized Euler constants"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  int digits = 30;
  long max_terms = 0;
  std::string cache_dir = "./.dzeta-cache";
  app.add_option("--cache-dir", cache_dir, "constant cache directory")
      ->capture_default_str();
  app.add_option("--max-terms", max_terms, "series length cap");

  auto* compute = app.add_subcommand("compute", "evaluate one value");
  std::string kind;
  compute->add_option("--kind", kind, "D | gamma_general | bendersky | stieltjes_shift | zeta | lerch")
      ->required();
  std::optional<std::string> s1, s2, lambda, alpha, z, s;
  std::optional<long> beta, mu, m_idx, a_idx;
  compute->add_option("--s1", s1);
  compute->add_option("--s2", s2);
  compute->add_option("--lambda", lambda);
  compute->add_option("--alpha", alpha);
  compute->add_option("--beta", beta);
  compute->add_option("--mu", mu);
  compute->add_option("--m", m_idx);
  compute->add_option("--a", a_idx);
  compute->add_option("--z", z);
  compute->add_option("--s", s);
  compute->add_option("--digits", digits)->capture_default_str();

  auto* constant = app.add_subcommand("constant", "named constant");
  std::string cname;
  int constant_digits = 50;  // constant tables default deeper than suites
  constant->add_option("--name", cname, "gamma | A<m> | Aneg1:<a> | gamma1")
      ->required();
  constant->add_option("--digits", constant_digits)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, report_path, format = "json";
  verify->add_option("--suite", suite,
                     "exact_identities | closed_forms | theorems_numeric | "
                     "functional_relation | oracles | trends | all")
      ->required();
  verify->add_option("--digits", digits)->capture_default_str();
  verify->add_option("--report", report_path, "write the report here");
  verify->add_option("--format", format, "json | csv")->capture_default_str();

  auto* table = app.add_subcommand("table", "evaluate a parameter grid");
  std::string spec, tformat, out_path;
  table->add_option("--spec", spec, "grid spec string")->required();
  table->add_option("--format", tformat, "json | csv")->required();
  table->add_option("--out", out_path, "output file")->required();
  table->add_option("--digits", digits)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  CtxPtr ctx(dz_ctx_new(digits, 0, max_terms));
  if (!ctx) {
    std::cerr << "error: invalid precision settings\n";
    return DZ_ERR_PARAM;
  }
  dz_ctx_set_cache_dir(ctx.get(), cache_dir.c_str());

  char* err = nullptr;
  if (compute->parsed()) {
    std::ostringstream params;
    params << "{";
    bool first = true;
    auto put = [&](const char* key, const std::string& val) {
      if (!first) params << ",";
      params << "\"" << key << "\":\"" << json_escape(val) << "\"";
      first = false;
    };
    if (s1) put("s1", *s1);
    if (s2) put("s2", *s2);
    if (lambda) put("lambda", *lambda);
    if (alpha) put("alpha", *alpha);
    if (beta) put("beta", std::to_string(*beta));
    if (mu) put("mu", std::to_string(*mu));
    if (m_idx) put("m", std::to_string(*m_idx));
    if (a_idx) put("a", std::to_string(*a_idx));
    if (z) put("z", *z);
    if (s) put("s", *s);
    params << "}";
    char* mid = nullptr;
    char* rad = nullptr;
    long terms = 0;
    dz_status st = dz_compute(ctx.get(), kind.c_str(), params.str().c_str(),
                              digits, &mid, &rad, &terms, &err);
    if (st != DZ_OK) return report_error(st, err);
    StrPtr m(mid), r(rad);
    std::cout << mid << " ± " << (rad ? rad : "0") << "\n";
    return 0;
  }
  if (constant->parsed()) {
    char* mid = nullptr;
    char* rad = nullptr;
    dz_status st =
        dz_constant(ctx.get(), cname.c_str(), constant_digits, &mid, &rad, &err);
    if (st != DZ_OK) return report_error(st, err);
    StrPtr m(mid), r(rad);
    std::cout << mid << " ± " << (rad ? rad : "0") << "\n";
    return 0;
  }
  if (verify->parsed()) {
    if (format != "json" && format != "csv") {
      std::cerr << "error: --format must be json or csv\n";
      return DZ_ERR_PARAM;
    }
    char* report = nullptr;
    long failed = 0;
    dz_status st = dz_verify(ctx.get(), suite.c_str(), digits,
                             format == "csv" ? 1 : 0, &report, &failed, &err);
    if (st != DZ_OK) return report_error(st, err);
    StrPtr r(report);
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "error: cannot write " << report_path << "\n";
        return DZ_ERR_IO;
      }
      out << report;
    } else {
      std::cout << report << "\n";
    }
    std::cerr << (failed == 0 ? "all cases passed" : "failures: ")
              << (failed == 0 ? "" : std::to_string(failed)) << "\n";
    return failed == 0 ? 0 : 1;
  }
  if (table->parsed()) {
    dz_status st = dz_table(ctx.get(), spec.c_str(), tformat.c_str(), digits,
                            out_path.c_str(), &err);
    if (st != DZ_OK) return report_error(st, err);
    return 0;
  }
  return 0;
}
