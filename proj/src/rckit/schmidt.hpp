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

#ifndef RCKIT_SCHMIDT_HPP
#define RCKIT_SCHMIDT_HPP

#include "rckit/linalg.hpp"

namespace rckit {

// Realigned (reshuffled) matrix: R[(m*nA+n),(mu*nB+nu)] = rho[(m*nB+mu),(n*nB+nu)].
struct RealignedMatrix {
  Dims dims;
  Matrix mat;  // nA^2 x nB^2
};

// Operator-Schmidt coefficients: the singular values of the realigned matrix,
// descending, clamped at zero, zero-padded to length d = min(nA^2, nB^2).
struct SchmidtSpectrum {
  RealVector values;
  int rank;
};

RealignedMatrix realign(const BipartiteState& rho);
// Pure index permutation on an arbitrary (nA*nB)^2 matrix; no validation.
Matrix realign_raw(const Matrix& mat, const Dims& dims);

SchmidtSpectrum schmidt_spectrum(const BipartiteState& rho);
// Spectrum of the realignment of a raw Hermitian matrix (used for operators
// outside the state body, e.g. local-orthogonal orbit points).
SchmidtSpectrum schmidt_spectrum_raw(const Matrix& mat, const Dims& dims);
// Descending singular values of an arbitrary matrix, clamped and padded to
// length pad (pad = 0 keeps the natural length min(rows, cols)).
RealVector singular_values(const Matrix& mat, int pad = 0);

double trace_norm_realigned(const BipartiteState& rho);

}  // namespace rckit

#endif  // RCKIT_SCHMIDT_HPP
