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

#include <sstream>

#include <json.hpp>

#include "dzeta/constants.hpp"
#include "dzeta/dseries.hpp"
#include "dzeta/verify.hpp"

namespace dzeta {
namespace verify {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

struct Grid {
  std::string kind;                       // "D" or "gamma"
  std::vector<std::string> columns;       // parameter names
  std::vector<std::vector<std::string>> points;
};

const std::vector<std::string> kDColumns = {"s1", "s2", "lambda"};
const std::vector<std::string> kGammaColumns = {"alpha", "beta", "mu"};

// Product form: "<kind>: p=<v>, q=<a>..<b>, ..."
// Explicit form: "<kind> @ p,q,r: v,v,v; v,v,v; ..."
Grid parse_grid(const std::string& spec) {
  Grid g;
  size_t at = spec.find('@');
  size_t colon = spec.find(':');
  if (at != std::string::npos && (colon == std::string::npos || at < colon)) {
    g.kind = trim(spec.substr(0, at));
    std::string rest = spec.substr(at + 1);
    size_t c2 = rest.find(':');
    if (c2 == std::string::npos)
      throw DomainError("grid spec: expected '<kind> @ names: points'");
    for (auto& name : split(rest.substr(0, c2), ','))
      g.columns.push_back(trim(name));
    std::string body = trim(rest.substr(c2 + 1));
    if (!body.empty()) {
      for (auto& pt : split(body, ';')) {
        std::string t = trim(pt);
        if (t.empty()) continue;
        std::vector<std::string> vals;
        for (auto& v : split(t, ',')) vals.push_back(trim(v));
        if (vals.size() != g.columns.size())
          throw DomainError("grid spec: point arity mismatch");
        g.points.push_back(std::move(vals));
      }
    }
    return g;
  }
  if (colon == std::string::npos)
    throw DomainError("grid spec: expected '<kind>: name=value, ...'");
  g.kind = trim(spec.substr(0, colon));
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  for (auto& part : split(spec.substr(colon + 1), ',')) {
    std::string t = trim(part);
    if (t.empty()) continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw DomainError("grid spec: expected name=value in '" + t + "'");
    std::string name = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    std::vector<std::string> values;
    size_t dots = val.find("..");
    if (dots != std::string::npos) {
      long lo = std::stol(val.substr(0, dots));
      long hi = std::stol(val.substr(dots + 2));
      for (long v = lo; v <= hi; ++v) values.push_back(std::to_string(v));
    } else {
      values.push_back(val);
    }
    axes.emplace_back(name, std::move(values));
  }
  for (auto& [name, _] : axes) g.columns.push_back(name);
  // cartesian product in declaration order
  std::vector<std::vector<std::string>> pts = {{}};
  for (auto& [name, values] : axes) {
    std::vector<std::vector<std::string>> next;
    for (const auto& base : pts)
      for (const auto& v : values) {
        auto row = base;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    pts = std::move(next);
  }
  if (!axes.empty()) g.points = std::move(pts);
  return g;
}

void reorder_columns(Grid& g, const std::vector<std::string>& canonical) {
  if (g.columns.size() != canonical.size())
    throw DomainError("grid spec: kind '" + g.kind + "' expects parameters " +
                      canonical[0] + "," + canonical[1] + "," + canonical[2]);
  std::vector<size_t> order;
  for (const auto& want : canonical) {
    bool found = false;
    for (size_t i = 0; i < g.columns.size(); ++i) {
      std::string name = g.columns[i];
      if (name == want || (want == "lambda" && name == "lam")) {
        order.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("grid spec: missing parameter " + want);
  }
  std::vector<std::vector<std::string>> pts;
  for (const auto& p : g.points) {
    std::vector<std::string> row;
    for (size_t i : order) row.push_back(p[i]);
    pts.push_back(std::move(row));
  }
  g.columns = canonical;
  g.points = std::move(pts);
}

}  // namespace

std::string emit_table(const std::string& grid_spec, const std::string& format,
                       int digits, const PrecisionContext& base_ctx) {
  PrecisionContext ctx(digits, base_ctx.guard_digits, base_ctx.max_terms);
  mpfr_prec_t prec = ctx.prec_bits();
  Grid g = parse_grid(grid_spec);
  bool is_d = (g.kind == "D" || g.kind == "d");
  bool is_gamma = (g.kind == "gamma");
  if (!is_d && !is_gamma)
    throw DomainError("grid spec: unknown kind '" + g.kind +
                      "' (expected D or gamma)");
  reorder_columns(g, is_d ? kDColumns : kGammaColumns);

  struct Row {
    std::vector<std::string> params;
    std::string midpoint;
    std::string radius;
    long terms_used;
  };
  std::vector<Row> rows;
  for (const auto& pt : g.points) {
    Row row;
    row.params = pt;
    if (is_d) {
      dseries::DParams p(Real::from_str(pt[0], prec), Real::from_str(pt[1], prec),
                         Real::from_str(pt[2], prec));
      SeriesResult r = dseries::d_direct(p, ctx);
      row.midpoint = r.value.str(digits);
      row.radius = r.value.radius_str();
      row.terms_used = r.terms_used;
    } else {
      constants::GammaParams p(Real::from_str(pt[0], prec), std::stol(pt[1]),
                               std::stol(pt[2]));
      Real v = constants::gamma_general(p, ctx);
      row.midpoint = v.str(digits);
      row.radius = v.radius_str();
      row.terms_used = 0;
    }
    rows.push_back(std::move(row));
  }

  if (format == "csv") {
    std::ostringstream os;
    for (size_t i = 0; i < g.columns.size(); ++i) os << g.columns[i] << ',';
    os << "midpoint,radius,terms_used\n";
    for (const auto& r : rows) {
      for (const auto& p : r.params) os << p << ',';
      os << r.midpoint << ',' << r.radius << ',' << r.terms_used << "\n";
    }
    return os.str();
  }
  if (format == "json") {
    nlohmann::json j;
    j["kind"] = is_d ? "D" : "gamma";
    j["digits"] = digits;
    j["columns"] = g.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row;
      for (size_t i = 0; i < g.columns.size(); ++i) row[g.columns[i]] = r.params[i];
      row["midpoint"] = r.midpoint;
      row["radius"] = r.radius;
      row["terms_used"] = r.terms_used;
      j["rows"].push_back(std::move(row));
    }
    j["artifact_version"] = kArtifactVersion;
    return j.dump(2);
  }
  throw DomainError("unknown table format: " + format);
}

}  // namespace verify
}  // namespace dzeta
