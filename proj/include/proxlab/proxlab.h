/*
 * Copyright 2026 The proxlab Authors
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

/*
 * C interface to the proxlab exact proximity laboratory.
 *
 * Every entry point returns a proxlab_status. On anything but PROXLAB_OK the
 * calling thread's proxlab_last_error() holds a one-line message; refusals
 * start with "refused:<reason>". Handles are opaque and must be released with
 * the matching *_free function. Rational numbers cross this boundary only as
 * text ("-3/4"), never as floating point.
 *
 * Indices are 0-based throughout.
 */

#ifndef PROXLAB_PROXLAB_H_
#define PROXLAB_PROXLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PROXLAB_API __declspec(dllexport)
#else
#define PROXLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum proxlab_status {
  PROXLAB_OK = 0,
  PROXLAB_REFUSED = 1,       /* budget exceeded, unbounded, no optimum, ... */
  PROXLAB_INVALID_INPUT = 2,
  PROXLAB_INTERNAL = 3       /* a guaranteed property failed: always a bug */
} proxlab_status;

typedef enum proxlab_format {
  PROXLAB_FORMAT_TEXT = 0,
  PROXLAB_FORMAT_JSON = 1,
  PROXLAB_FORMAT_CSV = 2
} proxlab_format;

typedef struct proxlab_instance proxlab_instance;
typedef struct proxlab_result proxlab_result;

PROXLAB_API const char* proxlab_version(void);
PROXLAB_API const char* proxlab_status_name(proxlab_status status);
/* Message for the last failed call on this thread, "" if none. */
PROXLAB_API const char* proxlab_last_error(void);

/* Instance files: {"A": [[int]], "b": [...], "c": [...], "I": [...],
 * "J": [...], "box": int (optional)}. */
PROXLAB_API proxlab_status proxlab_instance_parse(const char* json, proxlab_instance** out);
PROXLAB_API proxlab_status proxlab_instance_load(const char* path, proxlab_instance** out);
PROXLAB_API void proxlab_instance_free(proxlab_instance* inst);
PROXLAB_API proxlab_status proxlab_instance_dims(const proxlab_instance* inst, size_t* rows,
                                                 size_t* cols);

/* A budget of 0 selects the library default everywhere below. `set` is "I"
 * or "J". Vectors are comma-separated rationals, e.g. "1/3,1". */
PROXLAB_API proxlab_status proxlab_delta(const proxlab_instance* inst, uint64_t budget,
                                         proxlab_result** out);
PROXLAB_API proxlab_status proxlab_lp(const proxlab_instance* inst, proxlab_result** out);
PROXLAB_API proxlab_status proxlab_mip(const proxlab_instance* inst, const char* set,
                                       uint64_t budget, proxlab_result** out);
PROXLAB_API proxlab_status proxlab_nearest(const proxlab_instance* inst, const char* set,
                                           const char* target, uint64_t budget,
                                           proxlab_result** out);
/* w is the I-program optimum found by the solver; z_tilde may be NULL. */
PROXLAB_API proxlab_status proxlab_prox(const proxlab_instance* inst, const char* z_tilde,
                                        uint64_t budget, proxlab_result** out);
/* Re-verifies a certificate produced by proxlab_prox (its JSON rendering). */
PROXLAB_API proxlab_status proxlab_verify_certificate(const proxlab_instance* inst,
                                                      const char* certificate_json,
                                                      proxlab_result** out);

/* Vector files: {"u": [[int]], "alpha": [...], "p": int (optional)}. A
 * nonzero p overrides the file. */
PROXLAB_API proxlab_status proxlab_zerosum(const char* vectors_json, uint64_t p,
                                           proxlab_result** out);
PROXLAB_API proxlab_status proxlab_davenport(uint64_t p, uint64_t d, uint64_t budget,
                                             proxlab_result** out);
PROXLAB_API proxlab_status proxlab_lemma3(const char* vectors_json, uint64_t budget,
                                          proxlab_result** out);

PROXLAB_API proxlab_status proxlab_example1(long delta_max, proxlab_result** out);

typedef struct proxlab_search_config {
  uint64_t trials;
  uint64_t seed;
  uint32_t n_min, n_max;
  uint32_t m_min, m_max;
  int32_t entry_bound;
  int32_t box;
  uint64_t budget;
  int32_t timing; /* nonzero adds wall-clock times (output no longer reproducible) */
} proxlab_search_config;

PROXLAB_API void proxlab_search_config_default(proxlab_search_config* cfg);
/* Both produce artifacts "records.jsonl" and "summary.csv". A run that
 * records a bound violation returns PROXLAB_INTERNAL with *out still set. */
PROXLAB_API proxlab_status proxlab_search(const proxlab_search_config* cfg, proxlab_result** out);
PROXLAB_API proxlab_status proxlab_bimodular(const proxlab_search_config* cfg,
                                             proxlab_result** out);
PROXLAB_API proxlab_status proxlab_vc_check(const proxlab_instance* inst, const char* vertex,
                                            uint64_t budget, proxlab_result** out);

/* The returned text is owned by the result and lives until it is freed. */
PROXLAB_API const char* proxlab_result_render(const proxlab_result* res, proxlab_format format);
PROXLAB_API size_t proxlab_result_artifact_count(const proxlab_result* res);
PROXLAB_API const char* proxlab_result_artifact_name(const proxlab_result* res, size_t i);
PROXLAB_API const char* proxlab_result_artifact_data(const proxlab_result* res, size_t i);
PROXLAB_API void proxlab_result_free(proxlab_result* res);

#ifdef __cplusplus
}
#endif

#endif /* PROXLAB_PROXLAB_H_ */
