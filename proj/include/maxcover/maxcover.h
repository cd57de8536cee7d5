/* Copyright 2026 The maxcover Authors
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

/* C interface to libmaxcover.
 *
 * Every function returns an mc_status. On failure, mc_last_error() returns
 * a message for the calling thread that stays valid until that thread's
 * next failing call. Strings returned through char** are owned by the
 * caller and released with mc_string_free(). */

#ifndef MAXCOVER_MAXCOVER_H_
#define MAXCOVER_MAXCOVER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MAXCOVER_BUILDING)
#define MC_API __attribute__((visibility("default")))
#else
#define MC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
  MC_OK = 0,
  MC_INVALID_ARGUMENT = 1,
  MC_EMPTY_SET = 2,
  MC_OVERFLOW = 3,
  MC_INFEASIBLE_SKEW = 4,
  MC_CAP_EXCEEDED = 5,
  MC_PARSE = 6,
  MC_TYPE_MISMATCH = 7,
  MC_DOMAIN = 8,
  MC_IO = 9,
  MC_INTERNAL = 100
} mc_status;

typedef struct mc_instance mc_instance;
typedef struct mc_report mc_report;

MC_API const char* mc_version(void);
MC_API const char* mc_last_error(void);
MC_API const char* mc_status_name(mc_status status);
MC_API void mc_string_free(char* s);

/* Instance files */
MC_API mc_status mc_instance_parse(const char* text, mc_instance** out);
MC_API mc_status mc_instance_load(const char* path, mc_instance** out);
MC_API mc_status mc_instance_save(const mc_instance* inst, const char* path);
MC_API mc_status mc_instance_to_text(const mc_instance* inst, char** out);
MC_API mc_status mc_instance_info(const mc_instance* inst, size_t* set_count,
                                  size_t* k);
/* Replaces the budget k stored in the instance. */
MC_API mc_status mc_instance_set_k(mc_instance* inst, size_t k);
MC_API void mc_instance_free(mc_instance* inst);

/* Generators. kind: random | disjoint | overlap-chain | twin | rectangles */
typedef struct mc_generate_params {
  size_t n;
  size_t m;
  size_t k;
  size_t d;
  uint64_t universe;
  size_t overlap;
  size_t dim;
  int64_t extent;
  double alpha_l, alpha_r, delta_l, delta_r;
  uint64_t seed;
} mc_generate_params;

MC_API void mc_generate_params_default(mc_generate_params* params);
/* `twin` may be NULL; it receives L' for the twin generator and NULL
 * otherwise. */
MC_API mc_status mc_generate(const char* kind, const mc_generate_params* params,
                             mc_instance** primary, mc_instance** twin);

/* Solve. strategy: multi | single | single-sort.
 * backend: sorted | unsorted | btree | hash | rect. */
typedef struct mc_solve_options {
  double epsilon;
  double xi; /* > 0: used directly instead of deriving from epsilon */
  double gamma;
  const char* strategy;
  const char* backend;
  int has_seed; /* 0: use the instance file's seed */
  uint64_t seed;
  size_t trials;
  size_t threads; /* 0: sequential */
} mc_solve_options;

typedef struct mc_trial_summary {
  double z;
  int64_t z_rounded;
  int64_t coverage; /* -1 when not computed */
  int64_t optimum;  /* -1 when brute force was infeasible */
  double ratio;     /* NaN when unavailable */
  uint64_t samples_per_estimate;
  uint64_t steps;
  uint64_t random_draws;
  uint64_t membership_queries;
  size_t selected_count;
} mc_trial_summary;

MC_API void mc_solve_options_default(mc_solve_options* options);
MC_API mc_status mc_solve(const mc_instance* inst, const mc_solve_options* options,
                          mc_report** out);
MC_API size_t mc_report_trial_count(const mc_report* report);
MC_API mc_status mc_report_trial(const mc_report* report, size_t trial,
                                 mc_trial_summary* out);
/* Copies up to `capacity` selected indices of `trial` into `indices`. */
MC_API mc_status mc_report_selected(const mc_report* report, size_t trial,
                                    size_t* indices, size_t capacity);
MC_API mc_status mc_report_csv(const mc_report* report, char** out);
MC_API void mc_report_free(mc_report* report);

/* Exact baselines. method: greedy | brute-force. `indices` receives up to
 * `capacity` set indices; `count` receives k. cap 0 selects the default
 * brute-force cap. */
MC_API mc_status mc_exact(const mc_instance* inst, const char* method, uint64_t cap,
                          size_t* indices, size_t capacity, size_t* count,
                          uint64_t* coverage);

/* Verification suites; `json` receives the machine-readable report. */
MC_API mc_status mc_verify(const char* suite, uint64_t seed, int* passed, char** json);

typedef struct mc_bench_options {
  size_t n;
  size_t k;
  double xi;
  double gamma;
  const char* strategies; /* comma separated */
  const char* backend;
  const uint64_t* set_sizes;
  size_t set_size_count;
  uint64_t seed;
} mc_bench_options;

MC_API void mc_bench_options_default(mc_bench_options* options);
MC_API mc_status mc_bench(const mc_bench_options* options, int* independent_of_m,
                          char** csv);

#ifdef __cplusplus
}
#endif

#endif /* MAXCOVER_MAXCOVER_H_ */
