// Copyright 2026 The polyhardy authors.
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

#ifndef POLYHARDY_POLYHARDY_H_
#define POLYHARDY_POLYHARDY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(POLYHARDY_BUILDING)
#define PH_API __attribute__((visibility("default")))
#else
#define PH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PH_OK = 0,
  PH_ERR_INVALID_ARGUMENT = 1,
  PH_ERR_PARSE = 2,
  PH_ERR_IO = 3,
  PH_ERR_TRUNCATION_INFEASIBLE = 4,
  PH_ERR_DIVISIBILITY_AMBIGUOUS = 5,
  PH_ERR_DIMENSION = 6,
  PH_ERR_UNKNOWN_CHECK = 7,
  PH_ERR_PRECONDITION = 8,
  PH_ERR_INTERNAL = 9
} ph_status;

typedef enum {
  PH_VERDICT_PASS = 0,
  PH_VERDICT_FAIL = 1,
  PH_VERDICT_INCONCLUSIVE = 2,
  PH_VERDICT_UNASSERTED = 3
} ph_verdict;

typedef struct ph_spec_list ph_spec_list;
typedef struct ph_report_list ph_report_list;

typedef struct {
  int n_trunc;      /* 0: use the spec's N */
  int guard;        /* < 0: automatic */
  double tol;
  uint64_t seed;
  int max_iter;
  int timing;       /* nonzero: record runtime_ms */
} ph_options;

/* Message for the last failed call on this thread. */
PH_API const char* ph_last_error(void);

PH_API void ph_options_default(ph_options* opts);

PH_API ph_status ph_spec_list_load(const char* path, ph_spec_list** out);
PH_API ph_status ph_spec_list_parse(const char* json_text, ph_spec_list** out);
PH_API size_t ph_spec_list_size(const ph_spec_list* specs);
/* Largest zero modulus over spec k; negative when k is out of range. */
PH_API double ph_spec_max_zero_modulus(const ph_spec_list* specs, size_t k);
PH_API int ph_spec_truncation(const ph_spec_list* specs, size_t k);
/* Appends copies of src's specs to dst. */
PH_API ph_status ph_spec_list_append(ph_spec_list* dst, const ph_spec_list* src);
PH_API void ph_spec_list_free(ph_spec_list* specs);

/* Comma-separated check names; "all" expands. */
PH_API ph_status ph_run_checks(const ph_spec_list* specs, const char* checks,
                               const ph_options* opts, ph_report_list** out);
PH_API ph_status ph_check_one(const ph_spec_list* specs, size_t k, const char* id,
                              const ph_options* opts, ph_report_list** out);
PH_API ph_status ph_finite_rank(const ph_spec_list* phi, const ph_spec_list* psi,
                                const ph_options* opts, ph_report_list** out);
PH_API ph_status ph_section4(double alpha, const ph_options* opts, ph_report_list** out);

PH_API size_t ph_report_count(const ph_report_list* reports);
PH_API const char* ph_report_check_id(const ph_report_list* reports, size_t k);
PH_API ph_verdict ph_report_verdict(const ph_report_list* reports, size_t k);
PH_API size_t ph_report_residual_count(const ph_report_list* reports, size_t k);
PH_API const char* ph_report_residual_name(const ph_report_list* reports, size_t k, size_t r);
PH_API double ph_report_residual_value(const ph_report_list* reports, size_t k, size_t r);
/* NULL when the report carries no prediction. */
PH_API const char* ph_report_prediction(const ph_report_list* reports, size_t k);
PH_API double ph_report_runtime_ms(const ph_report_list* reports, size_t k);
/* JSON array of all reports; owned by the list. */
PH_API const char* ph_report_list_json(ph_report_list* reports);
PH_API void ph_report_list_free(ph_report_list* reports);

/* Newline-separated check names; static storage. */
PH_API const char* ph_list_checks(void);

#ifdef __cplusplus
}
#endif

#endif  // POLYHARDY_POLYHARDY_H_
