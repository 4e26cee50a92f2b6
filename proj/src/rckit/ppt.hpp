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

#ifndef RCKIT_PPT_HPP
#define RCKIT_PPT_HPP

#include "rckit/linalg.hpp"

namespace rckit {

struct PptReport {
  double minEigenvalue;  // most negative eigenvalue of rho^{T_A}
  bool isPpt;            // minEigenvalue >= -1e-9
};

// Transposes the named subsystem; on A the entry map is
// out[(i*nB+a),(j*nB+b)] = rho[(j*nB+a),(i*nB+b)].
Matrix partial_transpose(const BipartiteState& rho, Subsystem sub);

PptReport ppt_report(const BipartiteState& rho);

// PPT verdict as an exact separability oracle; valid only in 2x2, 2x3 and
// 3x2, any other dims throw UnsupportedDims.
bool is_separable_2xN(const BipartiteState& rho);

}  // namespace rckit

#endif  // RCKIT_PPT_HPP
