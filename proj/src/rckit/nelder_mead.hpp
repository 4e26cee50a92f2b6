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

#ifndef RCKIT_NELDER_MEAD_HPP
#define RCKIT_NELDER_MEAD_HPP

#include <functional>

#include "rckit/types.hpp"

namespace rckit {

struct NmOptions {
  int maxIters = 5000;
  double fTol = 1e-8;   // simplex objective-spread convergence threshold
  double xTol = 1e-9;   // simplex coordinate-spread convergence threshold
};

struct NmResult {
  RealVector x;
  double fx;
  int iters;
};

// Derivative-free simplex minimization with the dimension-adaptive
// reflection/expansion/contraction/shrink coefficients.  The initial simplex
// perturbs each coordinate by 5% (0.00025 when the coordinate is zero).
NmResult nelder_mead_min(const std::function<double(const RealVector&)>& f,
                         const RealVector& x0, const NmOptions& opts);

}  // namespace rckit

#endif  // RCKIT_NELDER_MEAD_HPP
