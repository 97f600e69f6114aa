// Copyright 2026 The povm-forge Authors
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

#ifndef POVM_FORGE_H_
#define POVM_FORGE_H_

/* C interface to the measurement-construction library. Every call returns a
 * povm_status; on failure povm_last_error() holds a message for the calling
 * thread. Strings handed out through char** must be released with
 * povm_string_free. Matrices are 8 doubles: re/im pairs, row-major. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define POVM_API __declspec(dllexport)
#else
#define POVM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum povm_status {
  POVM_OK = 0,
  POVM_ERR_NOT_HERMITIAN = 1,
  POVM_ERR_NOT_PSD = 2,
  POVM_ERR_NOT_PROJECTOR = 3,
  POVM_ERR_INVALID_CONFIG = 4,
  POVM_ERR_OUT_OF_RANGE = 5,
  POVM_ERR_NO_SOLUTION = 6,
  POVM_ERR_INCOMPLETE_SET = 7,
  POVM_ERR_SINGULAR_STAGE = 8,
  POVM_ERR_NON_FINITE = 9,
  POVM_ERR_VALIDATION = 10,
  POVM_ERR_PARSE = 11,
  POVM_ERR_IO = 12,
  POVM_ERR_INVALID_ARGUMENT = 20,
  POVM_ERR_INTERNAL = 99
} povm_status;

typedef enum povm_sample_mode {
  POVM_SAMPLE_DIRECT = 0, /* draw from the full operator set */
  POVM_SAMPLE_CHAIN = 1   /* simulate the cascade stage by stage */
} povm_sample_mode;

typedef struct povm_measurement povm_measurement;

POVM_API const char* povm_version(void);
POVM_API const char* povm_status_name(povm_status status);
POVM_API const char* povm_last_error(void);
POVM_API double povm_default_tolerance(void);

POVM_API void povm_string_free(char* s);

/* Builds from a config JSON text. tol <= 0 selects the default. */
POVM_API povm_status povm_build_json(const char* config_json, double tol, int dual_path_check,
                                     povm_measurement** out);
POVM_API void povm_measurement_free(povm_measurement* m);

/* The returned string lives as long as the handle. */
POVM_API povm_status povm_measurement_kind(const povm_measurement* m, const char** out);
POVM_API povm_status povm_measurement_outcomes(const povm_measurement* m, size_t* out);
POVM_API povm_status povm_measurement_operator(const povm_measurement* m, size_t k, double out[8]);
POVM_API povm_status povm_measurement_to_json(const povm_measurement* m, char** out);

/* state: preset name ("H", "V", "D", "A", "R", "L") or {"cH":..,"cV":..}. */
POVM_API povm_status povm_probabilities(const povm_measurement* m, const char* state, double* out,
                                        size_t n);
/* Probabilities as products along the cascade; equal to povm_probabilities
 * up to rounding. */
POVM_API povm_status povm_chain_probabilities(const povm_measurement* m, const char* state,
                                              double* out, size_t n);
POVM_API povm_status povm_expected_measurements(const povm_measurement* m, const char* state,
                                                double* out);

/* Fills outcomes[shots] and, if n_meas is not NULL, the number of two-outcome
 * measurements performed per shot (always 1 in direct mode for two-outcome
 * kinds). Bit-reproducible for a given seed. */
POVM_API povm_status povm_sample(const povm_measurement* m, const char* state, uint64_t seed,
                                 size_t shots, povm_sample_mode mode, uint32_t* outcomes,
                                 uint32_t* n_meas);

POVM_API povm_status povm_chi_square_gof(const uint64_t* counts, const double* probabilities,
                                         size_t n, double* statistic, int* dof, double* p_value);

/* POVM_ERR_VALIDATION when an invariant fails; the message names it. */
POVM_API povm_status povm_validate_json(const char* artifact_json, double tol);

/* Inverse design; results are config JSON accepted by povm_build_json. */
POVM_API povm_status povm_invert_sastom(double epsilon, double theta, double phi, char** config_json);
POVM_API povm_status povm_invert_gtom(double p, double q, double theta, double phi, int allow_swap,
                                      char** config_json);
/* targets: array of matrices, {"operators": [...]}, or a built artifact. */
POVM_API povm_status povm_invert_povm_json(const char* targets_json, char** config_json);

POVM_API povm_status povm_theta_curves_csv(const double* eps, size_t n, int grid, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* POVM_FORGE_H_ */
