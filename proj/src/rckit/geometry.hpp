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

#ifndef RCKIT_GEOMETRY_HPP
#define RCKIT_GEOMETRY_HPP

#include <cstdint>
#include <vector>

#include "rckit/linalg.hpp"

namespace rckit {

// Generalized Gell-Mann basis: element 0 is I/sqrt(n), the rest are
// traceless, all mutually Hilbert-Schmidt orthonormal.
struct HermitianBasis {
  int n;
  std::vector<Matrix> elements;  // n^2 matrices, n x n each
};

// Real coefficients of a Hermitian bipartite operator in the product basis
// {F^A_h ox F^B_k}; unit trace corresponds to scalar = 1/sqrt(nA*nB).
struct BlochCoords {
  Dims dims;
  double scalar;
  RealVector alphaA;  // length nA^2 - 1
  RealVector alphaB;  // length nB^2 - 1
  RealMatrix beta;    // (nA^2 - 1) x (nB^2 - 1)
};

HermitianBasis hermitian_basis(int n);

BlochCoords to_coords(const BipartiteState& rho);
BlochCoords to_coords_raw(const Matrix& hermitian, const Dims& dims);
// Linear reconstruction; deliberately does not validate positivity, since
// equivalence-class members may lie outside the state body.
Matrix from_coords(const BlochCoords& coords);

// Rotates the full coefficient matrix (identity components included) by
// orthogonal oa (nA^2 x nA^2) on the left and ob^T (nB^2 x nB^2) on the
// right, then reconstructs.  Output is Hermitian but may be non-positive or
// non-unit-trace.
Matrix apply_local_orthogonal(const BipartiteState& rho, const RealMatrix& oa,
                              const RealMatrix& ob);

// Dimension of the Schmidt equivalence class:
// d(d-1) - 1 - sum_k m_k (m_k - 1) / 2 for spectrum-value multiplicities m_k.
long class_dimension(int d, const std::vector<int>& multiplicities);

// First-order trace variation under the infinitesimal local orthogonal
// action: alphaA . epsA + alphaB . epsB + epsA^T beta epsB.
double trace_variation(const BlochCoords& coords, const RealVector& epsA,
                       const RealVector& epsB);

// Haar-distributed orthogonal matrix (QR of a normal matrix, sign-fixed).
RealMatrix random_orthogonal(int n, uint64_t seed);
// Haar-distributed unitary matrix (QR of a complex normal matrix, phase-fixed).
Matrix random_unitary(int n, uint64_t seed);

}  // namespace rckit

#endif  // RCKIT_GEOMETRY_HPP
