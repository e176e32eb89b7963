/* Copyright 2026 The dzeta authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the dzeta computation engine.
 *
 * All entry points return a dz_status; on failure an optional errmsg out
 * parameter receives a malloc'd description naming the violated precondition.
 * Every char* handed out by the library must be released with
 * dz_string_free(). The context handle is not thread safe; create one per
 * thread or serialize access.
 */

#ifndef DZETA_H
#define DZETA_H

#if defined(__GNUC__) || defined(__clang__)
#define DZ_API __attribute__((visibility("default")))
#else
#define DZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dz_ctx dz_ctx;

typedef enum dz_status {
  DZ_OK = 0,
  DZ_ERR_PARAM = 2,   /* bad parameters / domain violation */
  DZ_ERR_NOCONV = 3,  /* series or limit did not converge */
  DZ_ERR_IO = 4,      /* unwritable path or malformed file */
  DZ_ERR_INTERNAL = 5
} dz_status;

/* decimal_digits >= 1; guard_digits >= 5 (pass 0 for the default 15);
 * max_terms is the series cap (pass 0 for the default 10^7).
 * Returns NULL if the arguments are invalid. */
DZ_API dz_ctx* dz_ctx_new(int decimal_digits, int guard_digits, long max_terms);
DZ_API void dz_ctx_free(dz_ctx* ctx);

/* Directory for the persistent constant cache; empty or NULL disables it. */
DZ_API dz_status dz_ctx_set_cache_dir(dz_ctx* ctx, const char* path);

DZ_API const char* dz_version(void);
DZ_API void dz_string_free(char* s);

/* Evaluate one value. kind is one of
 *   "D"               params: {"s1": "...", "s2": "...", "lambda": "..."}
 *   "gamma_general"   params: {"alpha": "...", "beta": "...", "mu": "..."}
 *   "bendersky"       params: {"m": "..."}
 *   "stieltjes_shift" params: {"a": "..."}
 *   "zeta"            params: {"s": "..."}
 *   "lerch"           params: {"z": "...", "s": "...", "lambda": "..."}
 * params_json is a flat JSON object of decimal strings (numbers accepted).
 * midpoint_out receives the value printed to exactly `digits` decimal
 * places, radius_out the error-bound annotation. */
DZ_API dz_status dz_compute(dz_ctx* ctx, const char* kind, const char* params_json,
                     int digits, char** midpoint_out, char** radius_out,
                     long* terms_used_out, char** errmsg_out);

/* Named constant: "gamma" | "A<m>" | "Aneg1:<a>" | "gamma1". */
DZ_API dz_status dz_constant(dz_ctx* ctx, const char* name, int digits,
                      char** midpoint_out, char** radius_out,
                      char** errmsg_out);

/* Run a verification suite: exact_identities | closed_forms |
 * theorems_numeric | functional_relation | oracles | trends | all.
 * report_out receives the JSON report; format_csv != 0 switches the payload
 * to CSV. failed_out receives the failing-case count (the run itself is
 * DZ_OK even when cases fail). */
DZ_API dz_status dz_verify(dz_ctx* ctx, const char* suite, int digits, int format_csv,
                    char** report_out, long* failed_out, char** errmsg_out);

/* Evaluate a parameter grid and write it to out_path.
 * Product form:   "D: s1=1, s2=1, lambda=1..4"
 * Explicit form:  "gamma @ alpha,beta,mu: 1,0,1; 1,-1,1; 2,-1,1"
 * format is "json" or "csv". */
DZ_API dz_status dz_table(dz_ctx* ctx, const char* grid_spec, const char* format,
                   int digits, const char* out_path, char** errmsg_out);

#ifdef __cplusplus
}
#endif

#endif /* DZETA_H */
