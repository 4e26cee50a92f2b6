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

#ifndef RCKIT_BOUNDS_HPP
#define RCKIT_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rckit/criteria.hpp"
#include "rckit/states.hpp"

namespace rckit {

enum class SearchSet { Separable, RcBall, All };

const char* search_set_name(SearchSet set) noexcept;
SearchSet search_set_from_name(const std::string& name);

struct SearchConfig {
  int restarts = 64;
  int itersPerRestart = 5000;  // simplex iterations per penalty round
  uint64_t seed = 0;
  SearchSet set = SearchSet::RcBall;
  // Constraint penalty weight starts at penaltyWeight0 and doubles each of
  // penaltyRounds outer rounds; unconstrained searches run a single round.
  double penaltyWeight0 = 16.0;
  int penaltyRounds = 8;
  double tol = 1e-8;  // objective-change convergence tolerance
  // Product terms in the separable-set parameterization; 0 picks the
  // per-dims default.
  int sepTerms = 0;
};

struct BoundEstimate {
  Dims dims;
  int l;
  double value;  // M^[l] of argmax, recomputed through the public pipeline
  BipartiteState argmax;
  SearchConfig config;
  int bestRestartIndex;
};

struct CurvePoint {
  double m1;
  double maxSeparable;  // meaningful only when hasSeparable
  double maxAll;
  bool hasSeparable;
};

// Best-of-restarts stochastic maximization of M^[l] over the chosen set.
// Every reported value is attained by the stored argmax state, so estimates
// are true lower bounds regardless of optimizer convergence.
BoundEstimate maximize(const Dims& dims, int l, const SearchConfig& config);

// Maximum of M^[l] at fixed M^[1] = m1 for each grid value, over separable
// states (2xN only) and over all states.  Raw optima per point; no envelope
// post-processing.
std::vector<CurvePoint> profile_curve(const Dims& dims, int l,
                                      const RealVector& m1Grid,
                                      const SearchConfig& config);

// Runs maximize for l = 1..d on the separable set and the rc ball and emits
// the (strict-separable, strict-rc-ball) table pair; l = 1 entries are the
// analytic value 1.
std::pair<BoundTable, BoundTable> reproduce_tables(const Dims& dims,
                                                   const SearchConfig& config);

// Stable hash of the search configuration, recorded in table provenance.
std::string config_hash(const SearchConfig& config);

}  // namespace rckit

#endif  // RCKIT_BOUNDS_HPP
