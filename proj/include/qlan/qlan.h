/*
 * Copyright 2026 The QLAN Simulator Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the QLAN simulator.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a qlan_status; on
 * failure a human-readable message is available from qlan_last_error() on
 * the calling thread until the next failing call on that thread. Strings
 * returned through `const char**` out-parameters are owned by the handle
 * they were read from and stay valid until that handle is freed.
 */

#ifndef QLAN_QLAN_H
#define QLAN_QLAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QLAN_BUILDING_LIBRARY)
#    define QLAN_API __declspec(dllexport)
#  else
#    define QLAN_API __declspec(dllimport)
#  endif
#else
#  define QLAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlan_status {
  QLAN_OK = 0,
  QLAN_ERR_INVALID_ARGUMENT = 1, /* null handle / bad flag value */
  QLAN_ERR_PARSE = 2,            /* scenario document rejected */
  QLAN_ERR_DOMAIN = 3,           /* precondition of a graph/state operation */
  QLAN_ERR_IMPOSSIBLE_OUTCOME = 4,
  QLAN_ERR_PROTOCOL = 5,
  QLAN_ERR_BUDGET = 6,
  QLAN_ERR_IO = 7,
  QLAN_ERR_INTERNAL = 8
} qlan_status;

typedef enum qlan_verdict { QLAN_VERDICT_PASS = 0, QLAN_VERDICT_FAIL = 1 } qlan_verdict;

typedef struct qlan_scenario qlan_scenario;
typedef struct qlan_report qlan_report;
typedef struct qlan_sweep qlan_sweep;

QLAN_API const char* qlan_version(void);
QLAN_API const char* qlan_status_name(qlan_status status);
QLAN_API const char* qlan_last_error(void);

/* Scenarios ---------------------------------------------------------------*/

QLAN_API qlan_status qlan_scenario_parse(const char* json, size_t length, qlan_scenario** out);
QLAN_API qlan_status qlan_scenario_load(const char* path, qlan_scenario** out);
QLAN_API void qlan_scenario_free(qlan_scenario* scenario);

QLAN_API qlan_status qlan_scenario_set_seed(qlan_scenario* scenario, uint64_t seed);
/* "+-+"; NULL clears forced outcomes so they are sampled. */
QLAN_API qlan_status qlan_scenario_set_forced_outcomes(qlan_scenario* scenario, const char* signs);
QLAN_API qlan_status qlan_scenario_set_tolerance(qlan_scenario* scenario, double tolerance);
/* Test hook: clients use a deliberately wrong correction table. */
QLAN_API qlan_status qlan_scenario_set_tamper_corrections(qlan_scenario* scenario, int enabled);

QLAN_API qlan_status qlan_scenario_orchestrator_count(const qlan_scenario* scenario, size_t* out);
QLAN_API qlan_status qlan_scenario_client_count(const qlan_scenario* scenario, size_t* out);
/* Canonical JSON form (explicit topology). */
QLAN_API qlan_status qlan_scenario_json(const qlan_scenario* scenario, const char** out);
QLAN_API qlan_status qlan_scenario_initial_dot(const qlan_scenario* scenario, const char** out);

/* Single runs -------------------------------------------------------------*/

QLAN_API qlan_status qlan_run(const qlan_scenario* scenario, qlan_report** out);
QLAN_API void qlan_report_free(qlan_report* report);

QLAN_API qlan_status qlan_report_verdict(const qlan_report* report, qlan_verdict* out);
QLAN_API qlan_status qlan_report_fidelity(const qlan_report* report, double* out);
QLAN_API qlan_status qlan_report_measurement_count(const qlan_report* report, size_t* out);
QLAN_API qlan_status qlan_report_message_count(const qlan_report* report, size_t* out);
QLAN_API qlan_status qlan_report_json(const qlan_report* report, const char** out);
QLAN_API qlan_status qlan_report_summary(const qlan_report* report, const char** out);
QLAN_API qlan_status qlan_report_initial_dot(const qlan_report* report, const char** out);
/* The predicted topology the run was verified against. */
QLAN_API qlan_status qlan_report_final_dot(const qlan_report* report, const char** out);

/* Sweeps ------------------------------------------------------------------*/

typedef struct qlan_sweep_options {
  int all_outcomes;
  int all_bases;
  uint64_t budget;  /* 0: library default */
  unsigned threads; /* 0: hardware concurrency */
} qlan_sweep_options;

QLAN_API qlan_status qlan_sweep_run_count(const qlan_scenario* scenario, int all_outcomes,
                                          int all_bases, uint64_t* out);
QLAN_API qlan_status qlan_sweep_run(const qlan_scenario* scenario, const qlan_sweep_options* options,
                                    qlan_sweep** out);
QLAN_API void qlan_sweep_free(qlan_sweep* sweep);
QLAN_API qlan_status qlan_sweep_counts(const qlan_sweep* sweep, size_t* passed, size_t* total);
QLAN_API qlan_status qlan_sweep_json(const qlan_sweep* sweep, const char** out);

/* Utilities ---------------------------------------------------------------*/

/* Writes `length` bytes to `path` via a temporary file and rename. */
QLAN_API qlan_status qlan_write_file_atomic(const char* path, const char* data, size_t length);

#ifdef __cplusplus
}
#endif

#endif /* QLAN_QLAN_H */
