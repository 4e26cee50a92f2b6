/* Copyright 2026 The rckit Authors
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

/* C interface to the rckit library: bipartite entanglement detection via
 * the realignment criterion, symmetric-polynomial bounds, PPT checks,
 * channel-state duality, and stochastic bound searches.
 *
 * Every fallible function returns rck_status; on failure,
 * rck_last_error() holds a thread-local description.  Strings returned
 * through char** outputs are owned by the caller and released with
 * rck_string_free().
 */

#ifndef RCKIT_H_
#define RCKIT_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rck_status {
  RCK_OK = 0,
  RCK_DIMENSION_MISMATCH,
  RCK_NOT_HERMITIAN,
  RCK_NOT_UNIT_TRACE,
  RCK_NOT_POSITIVE,
  RCK_SVD_FAILURE,
  RCK_EIGEN_FAILURE,
  RCK_OUT_OF_RANGE,
  RCK_DIMS_MISMATCH,
  RCK_NOT_SQUARE_REALIGNMENT,
  RCK_UNSUPPORTED_DIMS,
  RCK_NOT_CPT,
  RCK_NOT_ORTHOGONAL,
  RCK_PARSE_ERROR,
  RCK_INVALID_ARGUMENT,
  RCK_UNKNOWN_ERROR
} rck_status;

typedef enum rck_search_set {
  RCK_SET_SEPARABLE = 0,
  RCK_SET_RC_BALL = 1,
  RCK_SET_ALL = 2
} rck_search_set;

/* Mirrors the library's SearchConfig; initialize with
 * rck_search_config_default() before overriding fields. */
typedef struct rck_search_config {
  int restarts;
  int iters_per_restart;
  uint64_t seed;
  int set; /* rck_search_set */
  double penalty_weight0;
  int penalty_rounds;
  double tol;
  int sep_terms; /* 0 selects the built-in default */
} rck_search_config;

/* Outcome of a necessary criterion: entangled = 1 when some bound is
 * violated (for channels: provably not entanglement breaking), else 0 and
 * (l, value, bound) describe the smallest-margin check that was run. */
typedef struct rck_verdict {
  int entangled;
  int l;
  double value;
  double bound;
} rck_verdict;

typedef struct rck_state rck_state;          /* validated bipartite state */
typedef struct rck_channel rck_channel;      /* linear map matrix */
typedef struct rck_bound_table rck_bound_table;

const char* rck_version(void);
const char* rck_status_name(rck_status status);
/* Message for the most recent failure on this thread; valid until the next
 * failing call on the same thread. */
const char* rck_last_error(void);

void rck_string_free(char* text);
void rck_state_free(rck_state* state);
void rck_channel_free(rck_channel* channel);
void rck_bound_table_free(rck_bound_table* table);

/* ---- states ---- */

/* Parses {"dims":[nA,nB],"re":...,"im":...} and validates the density
 * matrix (Hermitian, unit trace, positive semidefinite). */
rck_status rck_state_from_json(const char* text, rck_state** out);
rck_status rck_state_to_json(const rck_state* state, char** out);
rck_status rck_state_werner(double p, rck_state** out);
rck_status rck_state_dims(const rck_state* state, int* na, int* nb);
rck_status rck_state_purity(const rck_state* state, double* out);

/* Schmidt coefficients (singular values of the realigned matrix), padded
 * with zeros to d = min(nA^2, nB^2).  cap is the size of values; count
 * receives d and rank the numerical rank. */
rck_status rck_state_schmidt(const rck_state* state, double* values, int cap,
                             int* count, int* rank);
/* Elementary symmetric polynomials M^[1..d] of the Schmidt coefficients. */
rck_status rck_state_sym_polys(const rck_state* state, double* values,
                               int cap, int* count);
rck_status rck_state_rc_check(const rck_state* state, rck_verdict* out);
rck_status rck_state_rcl_check(const rck_state* state,
                               const rck_bound_table* table,
                               rck_verdict* out);
/* min_eig is the smallest eigenvalue of the partial transpose; is_ppt is 1
 * when it is nonnegative within tolerance. */
rck_status rck_state_ppt(const rck_state* state, double* min_eig,
                         int* is_ppt);
/* Exact separability in (2,2), (2,3), (3,2), where PPT is sufficient. */
rck_status rck_state_is_separable_2xn(const rck_state* state,
                                      int* separable);

/* Closed-form Werner values M^[1..4](p); out must hold 4 doubles. */
rck_status rck_werner_polys(double p, double* out);

/* ---- bound tables ---- */

/* Naive bounds y_l = C(d,l)/d^l for the given dims. */
rck_status rck_naive_table(int na, int nb, rck_bound_table** out);
/* Built-in analytic strict-separable table for 2x2: {1, 1/3, 5/108, 1/432}. */
rck_status rck_builtin_table_2x2(rck_bound_table** out);
rck_status rck_bound_table_from_json(const char* text,
                                     rck_bound_table** out);
rck_status rck_bound_table_to_json(const rck_bound_table* table, char** out);
rck_status rck_bound_table_values(const rck_bound_table* table,
                                  double* values, int cap, int* count);
/* Static strings; do not free. */
rck_status rck_bound_table_kind(const rck_bound_table* table,
                                const char** name);
rck_status rck_bound_table_origin(const rck_bound_table* table, char** out);

/* ---- channels ---- */

/* Parses {"nIn":..,"nOut":..,"re":...,"im":...}; the matrix has shape
 * nOut^2 x nIn^2 with entries <m|E(|mu><nu|)|n> at (m*nOut+n, mu*nIn+nu). */
rck_status rck_channel_from_json(const char* text, rck_channel** out);
rck_status rck_channel_to_json(const rck_channel* channel, char** out);
rck_status rck_channel_dims(const rck_channel* channel, int* n_in,
                            int* n_out);
/* RCK_OK iff the channel is completely positive and trace preserving. */
rck_status rck_channel_validate_cpt(const rck_channel* channel);
rck_status rck_channel_choi(const rck_channel* channel, rck_state** out);
rck_status rck_channel_of_state(const rck_state* state, rck_channel** out);
rck_status rck_channel_spectrum(const rck_channel* channel, double* values,
                                int cap, int* count, int* rank);
/* Necessary entanglement-breaking test; verdict.entangled = 1 means the
 * channel provably preserves some entanglement (NotEB). */
rck_status rck_channel_eb_check(const rck_channel* channel,
                                rck_verdict* out);
/* Exact EB test via the Choi state in (2,2), (2,3), (3,2). */
rck_status rck_channel_is_eb_2xn(const rck_channel* channel, int* eb);

/* ---- geometry ---- */

/* Dimension of the equivalence class of spectra with the given eigenvalue
 * multiplicities in total dimension d. */
rck_status rck_class_dimension(int d, const int* multiplicities, int count,
                               long* out);

/* ---- stochastic bound searches ---- */

void rck_search_config_default(rck_search_config* out);

/* Best-of-restarts maximization of M^[l] over the configured search set.
 * argmax may be NULL when only the value is needed. */
rck_status rck_maximize(int na, int nb, int l,
                        const rck_search_config* config, double* value,
                        int* best_restart, rck_state** argmax);
/* Strict-separable and rc-ball tables for 2x2 or 2x3 (l = 1..d). */
rck_status rck_reproduce_tables(int na, int nb,
                                const rck_search_config* config,
                                rck_bound_table** separable,
                                rck_bound_table** rc_ball);
/* CSV text "m1,max_separable,max_all" for max M^[l] at fixed M^[1] over the
 * grid; the separable column is empty when dims have no separable search. */
rck_status rck_curve_csv(int na, int nb, int l, const double* m1_grid,
                         int count, const rck_search_config* config,
                         char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RCKIT_H_ */
