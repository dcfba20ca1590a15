// Copyright 2026 The kcomplex Authors
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

/*
 * C interface to kcomplex: Krylov bases, operator dynamics and the
 * complexity experiments. Handles are opaque; every fallible call returns a
 * kc_status, and kc_last_error() gives the message of the last failure on
 * the calling thread.
 */

#ifndef KCOMPLEX_KCOMPLEX_H_
#define KCOMPLEX_KCOMPLEX_H_

#include <stddef.h>

#if defined(KCOMPLEX_BUILDING_LIBRARY)
#define KC_API __attribute__((visibility("default")))
#else
#define KC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_INVALID_INPUT = 1,
  KC_ERR_DOMAIN = 2,
  KC_ERR_TRUNCATION = 3,
  KC_ERR_NOT_COHERENT = 4,
  KC_ERR_NUMERICAL = 5,
  KC_ERR_IO = 6,
  KC_ERR_PARSE = 7,
  KC_ERR_INTERNAL = 99
} kc_status;

typedef enum kc_command {
  KC_CMD_LANCZOS = 0,
  KC_CMD_SU2 = 1,
  KC_CMD_SU11 = 2,
  KC_CMD_DEFORM = 3,
  KC_CMD_QUENCH = 4,
  KC_CMD_HEIGHTS = 5
} kc_command;

typedef struct kc_operator kc_operator;
typedef struct kc_table kc_table;

KC_API const char* kc_version(void);
/* "ok", "invalid-input", "domain-error", ... */
KC_API const char* kc_status_name(kc_status status);
/* Message of the last failed call on this thread; "" after a success. */
KC_API const char* kc_last_error(void);

/* ---- operators ---------------------------------------------------------- */

/* Row-major dim x dim entries; im may be NULL for a real matrix. Nonzero
 * hamiltonian rejects non-Hermitian input (tolerance 1e-12). */
KC_API kc_status kc_operator_create(size_t dim, const double* re, const double* im, int hamiltonian,
                                    kc_operator** out);
/* Text format: one row per line, entries "re im" separated by commas. */
KC_API kc_status kc_operator_load(const char* path, int hamiltonian, kc_operator** out);
KC_API kc_status kc_operator_save(const kc_operator* op, const char* path);
KC_API size_t kc_operator_dim(const kc_operator* op);
KC_API kc_status kc_operator_entry(const kc_operator* op, size_t row, size_t col, double* re, double* im);
KC_API void kc_operator_free(kc_operator* op);

/* Lanczos on the Liouvillian [H, .] seeded with the normalized operator
 * `seed`. Writes up to `capacity` hops beta_1..beta_{D-1} and sets
 * *dimension = D. max_dim = 0 means the full operator space. */
KC_API kc_status kc_lanczos_hops(const kc_operator* hamiltonian, const kc_operator* seed, size_t max_dim,
                                 double term_tol, double* hops, size_t capacity, size_t* dimension);

/* ---- closed forms and geometry ------------------------------------------ */

KC_API kc_status kc_analytic_ck_su2(double ell, double field, double t, double* out);
KC_API kc_status kc_analytic_ck_su11(double k, double field, double t, double* out);
/* Height of the latitude theta on the deformed sphere; KC_ERR_DOMAIN for
 * lambda outside (0, sqrt(3/2)]. */
KC_API kc_status kc_height(double theta, double lambda, double ell, double* out);
/* h(theta_n) for n = 0..2 ell; *count = 2 ell + 1. */
KC_API kc_status kc_height_weights(double lambda, double ell, double* out, size_t capacity, size_t* count);
KC_API kc_status kc_geodesic_length(double theta1, double psi1, double theta2, double psi2, double lambda,
                                    double ell, double* out);

/* ---- experiments -------------------------------------------------------- */

typedef struct kc_run_config {
  kc_command command;
  double ell;
  double k;
  double field;
  /* lambda_count = 0 selects the command default. */
  const double* lambdas;
  size_t lambda_count;
  /* NaN selects the command default (2 pi, or 3 for su11). */
  double t_max;
  double t_star;
  size_t grid_points;
  const char* hamiltonian_path;
  const char* seed_path;
  size_t max_dim;
  double term_tol;
} kc_run_config;

KC_API void kc_run_config_init(kc_run_config* config, kc_command command);
KC_API kc_status kc_command_parse(const char* name, kc_command* out);
KC_API kc_status kc_run(const kc_run_config* config, kc_table** out);

/* ---- result tables ------------------------------------------------------ */

KC_API size_t kc_table_rows(const kc_table* table);
KC_API size_t kc_table_columns(const kc_table* table);
/* NULL when col is out of range. */
KC_API const char* kc_table_column_name(const kc_table* table, size_t col);
KC_API kc_status kc_table_column_index(const kc_table* table, const char* name, size_t* col);
KC_API kc_status kc_table_value(const kc_table* table, size_t row, size_t col, double* out);
/* CSV with '#' provenance comments; path NULL or "-" writes to stdout. */
KC_API kc_status kc_table_write_csv(const kc_table* table, const char* path);
/* Copies the CSV text (NUL-terminated) if it fits; *required is the size
 * including the terminator. */
KC_API kc_status kc_table_to_csv(const kc_table* table, char* buffer, size_t capacity, size_t* required);
KC_API void kc_table_free(kc_table* table);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* KCOMPLEX_KCOMPLEX_H_ */
