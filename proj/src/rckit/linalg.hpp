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

#ifndef RCKIT_LINALG_HPP
#define RCKIT_LINALG_HPP

#include "rckit/types.hpp"

namespace rckit {

// Density matrix on H_A (x) H_B with the global row-major composite index
// convention: basis state |a>|b> sits at index a*nB + b.
struct BipartiteState {
  Dims dims;
  Matrix mat;  // (nA*nB) x (nA*nB); Hermitian, unit trace, PSD within tol
};

// Validates Hermiticity (then symmetrizes), unit trace, and positive
// semidefiniteness.  Throws DimensionMismatch, NotHermitian, NotUnitTrace,
// or NotPositive (reporting the most negative eigenvalue).
BipartiteState validate_density(const Matrix& mat, const Dims& dims);

// Kronecker product with the (i*nB+alpha, j*nB+beta) index convention.
Matrix tensor_product(const Matrix& a, const Matrix& b);

// Traces out the named subsystem, returning the reduced matrix on the other.
Matrix partial_trace(const BipartiteState& rho, Subsystem traced_out);
Matrix partial_trace_raw(const Matrix& mat, const Dims& dims,
                         Subsystem traced_out);

// tr(rho^2).
double purity(const BipartiteState& rho);

}  // namespace rckit

#endif  // RCKIT_LINALG_HPP
