// Copyright 2026 The rckit Authors
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

#include "rckit.h"

#include <cstring>
#include <string>
#include <utility>

#include "rckit/bounds.hpp"
#include "rckit/channels.hpp"
#include "rckit/criteria.hpp"
#include "rckit/geometry.hpp"
#include "rckit/linalg.hpp"
#include "rckit/ppt.hpp"
#include "rckit/schmidt.hpp"
#include "rckit/serialize.hpp"
#include "rckit/states.hpp"

struct rck_state {
  rckit::BipartiteState v;
};

struct rck_channel {
  rckit::ChannelMatrix v;
};

struct rck_bound_table {
  rckit::BoundTable v;
};

namespace {

thread_local std::string g_last_error;

rck_status map_errc(rckit::Errc code) {
  using rckit::Errc;
  switch (code) {
    case Errc::DimensionMismatch: return RCK_DIMENSION_MISMATCH;
    case Errc::NotHermitian: return RCK_NOT_HERMITIAN;
    case Errc::NotUnitTrace: return RCK_NOT_UNIT_TRACE;
    case Errc::NotPositive: return RCK_NOT_POSITIVE;
    case Errc::SvdFailure: return RCK_SVD_FAILURE;
    case Errc::EigenFailure: return RCK_EIGEN_FAILURE;
    case Errc::OutOfRange: return RCK_OUT_OF_RANGE;
    case Errc::DimsMismatch: return RCK_DIMS_MISMATCH;
    case Errc::NotSquareRealignment: return RCK_NOT_SQUARE_REALIGNMENT;
    case Errc::UnsupportedDims: return RCK_UNSUPPORTED_DIMS;
    case Errc::NotCpt: return RCK_NOT_CPT;
    case Errc::NotOrthogonal: return RCK_NOT_ORTHOGONAL;
    case Errc::ParseError: return RCK_PARSE_ERROR;
  }
  return RCK_UNKNOWN_ERROR;
}

rck_status fail(rck_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename F>
rck_status guarded(F&& body) {
  try {
    body();
    return RCK_OK;
  } catch (const rckit::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RCK_UNKNOWN_ERROR;
  }
}

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

rck_status to_config(const rck_search_config* in, rckit::SearchConfig* out) {
  if (in == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "config is null");
  }
  if (in->set < 0 || in->set > 2) {
    return fail(RCK_INVALID_ARGUMENT, "config.set out of range");
  }
  out->restarts = in->restarts;
  out->itersPerRestart = in->iters_per_restart;
  out->seed = in->seed;
  out->set = static_cast<rckit::SearchSet>(in->set);
  out->penaltyWeight0 = in->penalty_weight0;
  out->penaltyRounds = in->penalty_rounds;
  out->tol = in->tol;
  out->sepTerms = in->sep_terms;
  return RCK_OK;
}

void to_verdict(const rckit::Verdict& v, rck_verdict* out) {
  out->entangled = v.outcome == rckit::Outcome::Entangled ? 1 : 0;
  out->l = v.l;
  out->value = v.value;
  out->bound = v.bound;
}

rck_status copy_values(const rckit::RealVector& values, double* out, int cap,
                       int* count) {
  if (out == nullptr || count == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "output buffer is null");
  }
  const int n = static_cast<int>(values.size());
  if (cap < n) {
    return fail(RCK_INVALID_ARGUMENT, "output buffer too small");
  }
  for (int i = 0; i < n; ++i) out[i] = values[i];
  *count = n;
  return RCK_OK;
}

}  // namespace

extern "C" {

const char* rck_version(void) { return "0.1.0"; }

const char* rck_status_name(rck_status status) {
  switch (status) {
    case RCK_OK: return "ok";
    case RCK_DIMENSION_MISMATCH: return "dimension-mismatch";
    case RCK_NOT_HERMITIAN: return "not-hermitian";
    case RCK_NOT_UNIT_TRACE: return "not-unit-trace";
    case RCK_NOT_POSITIVE: return "not-positive";
    case RCK_SVD_FAILURE: return "svd-failure";
    case RCK_EIGEN_FAILURE: return "eigen-failure";
    case RCK_OUT_OF_RANGE: return "out-of-range";
    case RCK_DIMS_MISMATCH: return "dims-mismatch";
    case RCK_NOT_SQUARE_REALIGNMENT: return "not-square-realignment";
    case RCK_UNSUPPORTED_DIMS: return "unsupported-dims";
    case RCK_NOT_CPT: return "not-cpt";
    case RCK_NOT_ORTHOGONAL: return "not-orthogonal";
    case RCK_PARSE_ERROR: return "parse-error";
    case RCK_INVALID_ARGUMENT: return "invalid-argument";
    case RCK_UNKNOWN_ERROR: return "unknown-error";
  }
  return "unknown-error";
}

const char* rck_last_error(void) { return g_last_error.c_str(); }

void rck_string_free(char* text) { delete[] text; }
void rck_state_free(rck_state* state) { delete state; }
void rck_channel_free(rck_channel* channel) { delete channel; }
void rck_bound_table_free(rck_bound_table* table) { delete table; }

rck_status rck_state_from_json(const char* text, rck_state** out) {
  if (text == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new rck_state{rckit::state_from_json(text)};
  });
}

rck_status rck_state_to_json(const rck_state* state, char** out) {
  if (state == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = dup_string(rckit::state_to_json(state->v)); });
}

rck_status rck_state_werner(double p, rck_state** out) {
  if (out == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new rck_state{rckit::werner(p)}; });
}

rck_status rck_state_dims(const rck_state* state, int* na, int* nb) {
  if (state == nullptr || na == nullptr || nb == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  *na = state->v.dims.na;
  *nb = state->v.dims.nb;
  return RCK_OK;
}

rck_status rck_state_purity(const rck_state* state, double* out) {
  if (state == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = rckit::purity(state->v); });
}

rck_status rck_state_schmidt(const rck_state* state, double* values, int cap,
                             int* count, int* rank) {
  if (state == nullptr || rank == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  rck_status status = RCK_OK;
  rck_status guard = guarded([&] {
    const rckit::SchmidtSpectrum s = rckit::schmidt_spectrum(state->v);
    status = copy_values(s.values, values, cap, count);
    *rank = s.rank;
  });
  return guard != RCK_OK ? guard : status;
}

rck_status rck_state_sym_polys(const rck_state* state, double* values,
                               int cap, int* count) {
  if (state == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  rck_status status = RCK_OK;
  rck_status guard = guarded([&] {
    const rckit::SymmetricPolys m =
        rckit::symmetric_polys(rckit::schmidt_spectrum(state->v));
    status = copy_values(m.values, values, cap, count);
  });
  return guard != RCK_OK ? guard : status;
}

rck_status rck_state_rc_check(const rck_state* state, rck_verdict* out) {
  if (state == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { to_verdict(rckit::rc_check(state->v), out); });
}

rck_status rck_state_rcl_check(const rck_state* state,
                               const rck_bound_table* table,
                               rck_verdict* out) {
  if (state == nullptr || table == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    to_verdict(rckit::rcl_check(state->v, table->v), out);
  });
}

rck_status rck_state_ppt(const rck_state* state, double* min_eig,
                         int* is_ppt) {
  if (state == nullptr || min_eig == nullptr || is_ppt == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const rckit::PptReport report = rckit::ppt_report(state->v);
    *min_eig = report.minEigenvalue;
    *is_ppt = report.isPpt ? 1 : 0;
  });
}

rck_status rck_state_is_separable_2xn(const rck_state* state,
                                      int* separable) {
  if (state == nullptr || separable == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *separable = rckit::is_separable_2xN(state->v) ? 1 : 0;
  });
}

rck_status rck_werner_polys(double p, double* out) {
  if (out == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const rckit::SymmetricPolys m = rckit::werner_polys(p);
    for (int i = 0; i < 4; ++i) out[i] = m.values[i];
  });
}

rck_status rck_naive_table(int na, int nb, rck_bound_table** out) {
  if (out == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new rck_bound_table{rckit::naive_table(rckit::Dims(na, nb))};
  });
}

rck_status rck_builtin_table_2x2(rck_bound_table** out) {
  if (out == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new rck_bound_table{rckit::builtin_strict_table_2x2()};
  });
}

rck_status rck_bound_table_from_json(const char* text,
                                     rck_bound_table** out) {
  if (text == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new rck_bound_table{rckit::bound_table_from_json(text)};
  });
}

rck_status rck_bound_table_to_json(const rck_bound_table* table, char** out) {
  if (table == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = dup_string(rckit::bound_table_to_json(table->v));
  });
}

rck_status rck_bound_table_values(const rck_bound_table* table,
                                  double* values, int cap, int* count) {
  if (table == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  return copy_values(table->v.bounds, values, cap, count);
}

rck_status rck_bound_table_kind(const rck_bound_table* table,
                                const char** name) {
  if (table == nullptr || name == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  *name = rckit::bound_kind_name(table->v.kind);
  return RCK_OK;
}

rck_status rck_bound_table_origin(const rck_bound_table* table, char** out) {
  if (table == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  std::string origin = table->v.provenance.origin;
  if (!table->v.provenance.configHash.empty()) {
    origin += " (config " + table->v.provenance.configHash + ")";
  }
  *out = dup_string(origin);
  return RCK_OK;
}

rck_status rck_channel_from_json(const char* text, rck_channel** out) {
  if (text == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new rck_channel{rckit::channel_from_json(text)};
  });
}

rck_status rck_channel_to_json(const rck_channel* channel, char** out) {
  if (channel == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = dup_string(rckit::channel_to_json(channel->v));
  });
}

rck_status rck_channel_dims(const rck_channel* channel, int* n_in,
                            int* n_out) {
  if (channel == nullptr || n_in == nullptr || n_out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  *n_in = channel->v.nIn;
  *n_out = channel->v.nOut;
  return RCK_OK;
}

rck_status rck_channel_validate_cpt(const rck_channel* channel) {
  if (channel == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  return guarded([&] { rckit::validate_cpt(channel->v); });
}

rck_status rck_channel_choi(const rck_channel* channel, rck_state** out) {
  if (channel == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new rck_state{rckit::choi_state(channel->v)};
  });
}

rck_status rck_channel_of_state(const rck_state* state, rck_channel** out) {
  if (state == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new rck_channel{rckit::channel_of_state(state->v)};
  });
}

rck_status rck_channel_spectrum(const rck_channel* channel, double* values,
                                int cap, int* count, int* rank) {
  if (channel == nullptr || rank == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  rck_status status = RCK_OK;
  rck_status guard = guarded([&] {
    const rckit::SchmidtSpectrum s = rckit::channel_spectrum(channel->v);
    status = copy_values(s.values, values, cap, count);
    *rank = s.rank;
  });
  return guard != RCK_OK ? guard : status;
}

rck_status rck_channel_eb_check(const rck_channel* channel,
                                rck_verdict* out) {
  if (channel == nullptr || out == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    to_verdict(rckit::eb_necessary_check(channel->v), out);
  });
}

rck_status rck_channel_is_eb_2xn(const rck_channel* channel, int* eb) {
  if (channel == nullptr || eb == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *eb = rckit::is_eb_2xN(channel->v) ? 1 : 0; });
}

rck_status rck_class_dimension(int d, const int* multiplicities, int count,
                               long* out) {
  if (multiplicities == nullptr || out == nullptr || count < 1) {
    return fail(RCK_INVALID_ARGUMENT, "null or empty multiplicities");
  }
  return guarded([&] {
    std::vector<int> mults(multiplicities, multiplicities + count);
    *out = rckit::class_dimension(d, mults);
  });
}

void rck_search_config_default(rck_search_config* out) {
  if (out == nullptr) return;
  const rckit::SearchConfig defaults;
  out->restarts = defaults.restarts;
  out->iters_per_restart = defaults.itersPerRestart;
  out->seed = defaults.seed;
  out->set = static_cast<int>(defaults.set);
  out->penalty_weight0 = defaults.penaltyWeight0;
  out->penalty_rounds = defaults.penaltyRounds;
  out->tol = defaults.tol;
  out->sep_terms = defaults.sepTerms;
}

rck_status rck_maximize(int na, int nb, int l,
                        const rck_search_config* config, double* value,
                        int* best_restart, rck_state** argmax) {
  if (value == nullptr) return fail(RCK_INVALID_ARGUMENT, "null argument");
  rckit::SearchConfig cfg;
  rck_status status = to_config(config, &cfg);
  if (status != RCK_OK) return status;
  return guarded([&] {
    rckit::BoundEstimate est = rckit::maximize(rckit::Dims(na, nb), l, cfg);
    *value = est.value;
    if (best_restart != nullptr) *best_restart = est.bestRestartIndex;
    if (argmax != nullptr) {
      *argmax = new rck_state{std::move(est.argmax)};
    }
  });
}

rck_status rck_reproduce_tables(int na, int nb,
                                const rck_search_config* config,
                                rck_bound_table** separable,
                                rck_bound_table** rc_ball) {
  if (separable == nullptr || rc_ball == nullptr) {
    return fail(RCK_INVALID_ARGUMENT, "null argument");
  }
  rckit::SearchConfig cfg;
  rck_status status = to_config(config, &cfg);
  if (status != RCK_OK) return status;
  return guarded([&] {
    auto tables = rckit::reproduce_tables(rckit::Dims(na, nb), cfg);
    *separable = new rck_bound_table{std::move(tables.first)};
    *rc_ball = new rck_bound_table{std::move(tables.second)};
  });
}

rck_status rck_curve_csv(int na, int nb, int l, const double* m1_grid,
                         int count, const rck_search_config* config,
                         char** out) {
  if (m1_grid == nullptr || out == nullptr || count < 1) {
    return fail(RCK_INVALID_ARGUMENT, "null or empty grid");
  }
  rckit::SearchConfig cfg;
  rck_status status = to_config(config, &cfg);
  if (status != RCK_OK) return status;
  return guarded([&] {
    rckit::RealVector grid =
        Eigen::Map<const rckit::RealVector>(m1_grid, count);
    const std::vector<rckit::CurvePoint> curve =
        rckit::profile_curve(rckit::Dims(na, nb), l, grid, cfg);
    *out = dup_string(rckit::curve_to_csv(curve));
  });
}

}  // extern "C"
