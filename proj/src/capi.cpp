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

#include "dzeta.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "dzeta/constants.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/verify.hpp"

struct dz_ctx {
  dzeta::PrecisionContext prec;
  std::string cache_dir;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** errmsg_out, const std::string& msg) {
  if (errmsg_out) *errmsg_out = dup_string(msg);
}

template <typename F>
dz_status guarded(char** errmsg_out, F&& body) {
  try {
    return body();
  } catch (const dzeta::DomainError& e) {
    set_err(errmsg_out, e.what());
    return DZ_ERR_PARAM;
  } catch (const dzeta::ConvergenceError& e) {
    set_err(errmsg_out, e.what());
    return DZ_ERR_NOCONV;
  } catch (const dzeta::IoError& e) {
    set_err(errmsg_out, e.what());
    return DZ_ERR_IO;
  } catch (const std::exception& e) {
    set_err(errmsg_out, e.what());
    return DZ_ERR_INTERNAL;
  }
}

// The constant cache is process global; point it at this context's directory
// before any evaluation that may touch it.
void sync_cache(const dz_ctx* ctx) {
  dzeta::constants::Cache::global().set_dir(ctx->cache_dir);
}

}  // namespace

extern "C" {

dz_ctx* dz_ctx_new(int decimal_digits, int guard_digits, long max_terms) {
  try {
    dzeta::PrecisionContext prec(decimal_digits,
                                 guard_digits > 0 ? guard_digits : 15,
                                 max_terms > 0 ? max_terms : 10'000'000);
    return new dz_ctx{prec, ""};
  } catch (...) {
    return nullptr;
  }
}

void dz_ctx_free(dz_ctx* ctx) { delete ctx; }

dz_status dz_ctx_set_cache_dir(dz_ctx* ctx, const char* path) {
  if (!ctx) return DZ_ERR_PARAM;
  ctx->cache_dir = path ? path : "";
  return DZ_OK;
}

const char* dz_version(void) { return dzeta::verify::kArtifactVersion; }

void dz_string_free(char* s) { std::free(s); }

dz_status dz_compute(dz_ctx* ctx, const char* kind, const char* params_json,
                     int digits, char** midpoint_out, char** radius_out,
                     long* terms_used_out, char** errmsg_out) {
  if (!ctx || !kind || !midpoint_out) {
    set_err(errmsg_out, "null argument");
    return DZ_ERR_PARAM;
  }
  return guarded(errmsg_out, [&]() -> dz_status {
    sync_cache(ctx);
    std::vector<std::pair<std::string, std::string>> params;
    if (params_json && *params_json) {
      nlohmann::json j = nlohmann::json::parse(params_json, nullptr, false);
      if (j.is_discarded() || !j.is_object())
        throw dzeta::DomainError("params_json must be a JSON object");
      for (auto& [k, v] : j.items()) {
        params.emplace_back(
            k, v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    auto result = dzeta::verify::compute_value(kind, params, digits, ctx->prec);
    *midpoint_out = dup_string(result.midpoint);
    if (radius_out) *radius_out = dup_string(result.radius);
    if (terms_used_out) *terms_used_out = result.terms_used;
    return DZ_OK;
  });
}

dz_status dz_constant(dz_ctx* ctx, const char* name, int digits,
                      char** midpoint_out, char** radius_out,
                      char** errmsg_out) {
  if (!ctx || !name || !midpoint_out) {
    set_err(errmsg_out, "null argument");
    return DZ_ERR_PARAM;
  }
  return guarded(errmsg_out, [&]() -> dz_status {
    sync_cache(ctx);
    auto result = dzeta::verify::compute_constant(name, digits, ctx->prec);
    *midpoint_out = dup_string(result.midpoint);
    if (radius_out) *radius_out = dup_string(result.radius);
    return DZ_OK;
  });
}

dz_status dz_verify(dz_ctx* ctx, const char* suite, int digits, int format_csv,
                    char** report_out, long* failed_out, char** errmsg_out) {
  if (!ctx || !suite) {
    set_err(errmsg_out, "null argument");
    return DZ_ERR_PARAM;
  }
  return guarded(errmsg_out, [&]() -> dz_status {
    sync_cache(ctx);
    dzeta::verify::VerificationReport report =
        dzeta::verify::run_suite(suite, digits, ctx->prec);
    if (report_out)
      *report_out = dup_string(format_csv ? report.to_csv() : report.to_json());
    if (failed_out) *failed_out = report.failed;
    return DZ_OK;
  });
}

dz_status dz_table(dz_ctx* ctx, const char* grid_spec, const char* format,
                   int digits, const char* out_path, char** errmsg_out) {
  if (!ctx || !grid_spec || !format || !out_path) {
    set_err(errmsg_out, "null argument");
    return DZ_ERR_PARAM;
  }
  return guarded(errmsg_out, [&]() -> dz_status {
    sync_cache(ctx);
    std::string payload =
        dzeta::verify::emit_table(grid_spec, format, digits, ctx->prec);
    std::ofstream out(out_path);
    if (!out) throw dzeta::IoError(std::string("cannot write ") + out_path);
    out << payload;
    if (!out.good())
      throw dzeta::IoError(std::string("write failed for ") + out_path);
    return DZ_OK;
  });
}

}  // extern "C"
