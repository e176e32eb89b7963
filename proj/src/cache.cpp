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

#include <fstream>
#include <mutex>

#include <json.hpp>

#include "dzeta/constants.hpp"

namespace dzeta {
namespace constants {

namespace {

std::mutex g_cache_mutex;

std::string file_name(const std::string& id, int digits) {
  return id + "_d" + std::to_string(digits) + ".json";
}

}  // namespace

Cache& Cache::global() {
  static Cache instance;
  return instance;
}

std::optional<Real> Cache::load(const std::string& id, int digits,
                                mpfr_prec_t prec) const {
  if (!enabled()) return std::nullopt;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  std::filesystem::path f = dir_ / file_name(id, digits);
  std::ifstream in(f);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("id").get<std::string>() != id) return std::nullopt;
    int stored_digits = j.at("digits").get<int>();
    if (stored_digits < digits) return std::nullopt;
    mpfr_prec_t stored_prec = prec;
    if (j.contains("prec_bits"))
      stored_prec = std::max<mpfr_prec_t>(prec, j.at("prec_bits").get<long>());
    Real v = Real::from_exact_strings(j.at("midpoint").get<std::string>(),
                                      j.at("radius").get<std::string>(),
                                      stored_prec);
    // Re-verify the stored radius against the requested precision before
    // serving the hit; tolerate the structural gap slow limits live with.
    Real eps = Real::ten_pow(-(digits - 10), 64);
    if (mpfr_cmp(v.rad(), eps.mid()) > 0) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
}

void Cache::store(const std::string& id, int digits, const Real& value) const {
  if (!enabled()) return;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  auto [mid, rad] = value.exact_strings();
  nlohmann::json j{{"id", id},
                   {"digits", digits},
                   {"prec_bits", static_cast<long>(value.prec())},
                   {"midpoint", mid},
                   {"radius", rad}};
  std::filesystem::path final_path = dir_ / file_name(id, digits);
  std::filesystem::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best effort; computation already succeeded
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, final_path, ec);
}

}  // namespace constants
}  // namespace dzeta
