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

#ifndef RCKIT_STATES_HPP
#define RCKIT_STATES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rckit/criteria.hpp"
#include "rckit/linalg.hpp"

namespace rckit {

// Convex mixture of K pure product states; every assembled state is
// separable by construction.
struct SeparableRecipe {
  RealVector weights;             // length K, nonnegative, sums to 1
  std::vector<Vector> factorsA;   // K pure states on A
  std::vector<Vector> factorsB;   // K pure states on B
};

BipartiteState assemble_separable(const SeparableRecipe& recipe,
                                  const Dims& dims);

// Caratheodory cardinality bound (nA*nB)^2, the default K.
int default_separable_terms(const Dims& dims);

// rho_p = p |phi><phi| + (1-p) I/4 on 2x2, |phi> = (|00>+|11>)/sqrt(2).
BipartiteState werner(double p);
// Closed forms {(1+3p)/2, 3(p+p^2)/4, (3p^2+p^3)/8, p^3/16}.
SymmetricPolys werner_polys(double p);

// Projector onto (1/sqrt(n)) sum_a |a>|a> with dims (n,n).
BipartiteState max_entangled(int n);

BipartiteState random_pure(const Dims& dims, uint64_t seed);
// Hilbert-Schmidt ensemble: G G^dagger / tr with G complex standard normal.
BipartiteState random_density(const Dims& dims, uint64_t seed);
// K product pure pairs with flat-simplex weights; K <= 0 selects the default.
std::pair<BipartiteState, SeparableRecipe> random_separable(const Dims& dims,
                                                            int K,
                                                            uint64_t seed);

}  // namespace rckit

#endif  // RCKIT_STATES_HPP
