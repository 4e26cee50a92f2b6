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

#include "rckit/geometry.hpp"

#include <Eigen/QR>
#include <cmath>

#include "rckit/rng.hpp"

namespace rckit {

HermitianBasis hermitian_basis(int n) {
  if (n < 2) {
    throw Error(Errc::OutOfRange, "hermitian_basis requires n >= 2");
  }
  HermitianBasis basis;
  basis.n = n;
  basis.elements.reserve(n * n);
  basis.elements.push_back(Matrix::Identity(n, n) / std::sqrt(double(n)));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Matrix sym = Matrix::Zero(n, n);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.elements.push_back(sym);
      Matrix anti = Matrix::Zero(n, n);
      anti(j, k) = Complex(0.0, -inv_sqrt2);
      anti(k, j) = Complex(0.0, inv_sqrt2);
      basis.elements.push_back(anti);
    }
  }
  for (int m = 1; m < n; ++m) {
    Matrix diag = Matrix::Zero(n, n);
    const double norm = 1.0 / std::sqrt(double(m) * (m + 1));
    for (int j = 0; j < m; ++j) diag(j, j) = norm;
    diag(m, m) = -double(m) * norm;
    basis.elements.push_back(diag);
  }
  return basis;
}

namespace {

// Full coefficient matrix C_hk = tr((F_h ox F_k) rho), identity row/column
// included; real for Hermitian input.
RealMatrix coefficient_matrix(const Matrix& op, const Dims& dims) {
  const HermitianBasis ba = hermitian_basis(dims.na);
  const HermitianBasis bb = hermitian_basis(dims.nb);
  const int sa = dims.na * dims.na, sb = dims.nb * dims.nb;
  RealMatrix c(sa, sb);
  for (int h = 0; h < sa; ++h) {
    for (int k = 0; k < sb; ++k) {
      Complex acc = 0.0;
      for (int i = 0; i < dims.na; ++i)
        for (int j = 0; j < dims.na; ++j) {
          const Complex fa = ba.elements[h](i, j);
          if (fa == Complex(0.0, 0.0)) continue;
          for (int a = 0; a < dims.nb; ++a)
            for (int b = 0; b < dims.nb; ++b)
              acc += fa * bb.elements[k](a, b) *
                     op(j * dims.nb + b, i * dims.nb + a);
        }
      c(h, k) = acc.real();
    }
  }
  return c;
}

Matrix reconstruct(const RealMatrix& c, const Dims& dims) {
  const HermitianBasis ba = hermitian_basis(dims.na);
  const HermitianBasis bb = hermitian_basis(dims.nb);
  const int n = dims.total();
  Matrix op = Matrix::Zero(n, n);
  for (int h = 0; h < c.rows(); ++h)
    for (int k = 0; k < c.cols(); ++k) {
      if (c(h, k) == 0.0) continue;
      op += c(h, k) * tensor_product(ba.elements[h], bb.elements[k]);
    }
  return op;
}

}  // namespace

BlochCoords to_coords_raw(const Matrix& hermitian, const Dims& dims) {
  if (hermitian.rows() != dims.total() || hermitian.cols() != dims.total()) {
    throw Error(Errc::DimsMismatch, "operator size does not match dims");
  }
  const RealMatrix c = coefficient_matrix(hermitian, dims);
  BlochCoords coords;
  coords.dims = dims;
  coords.scalar = c(0, 0);
  coords.alphaA = c.block(1, 0, c.rows() - 1, 1);
  coords.alphaB = c.block(0, 1, 1, c.cols() - 1).transpose();
  coords.beta = c.block(1, 1, c.rows() - 1, c.cols() - 1);
  return coords;
}

BlochCoords to_coords(const BipartiteState& rho) {
  return to_coords_raw(rho.mat, rho.dims);
}

Matrix from_coords(const BlochCoords& coords) {
  const Dims& dims = coords.dims;
  const int sa = dims.na * dims.na, sb = dims.nb * dims.nb;
  if (coords.alphaA.size() != sa - 1 || coords.alphaB.size() != sb - 1 ||
      coords.beta.rows() != sa - 1 || coords.beta.cols() != sb - 1) {
    throw Error(Errc::DimsMismatch, "coordinate shapes do not match dims");
  }
  RealMatrix c(sa, sb);
  c(0, 0) = coords.scalar;
  c.block(1, 0, sa - 1, 1) = coords.alphaA;
  c.block(0, 1, 1, sb - 1) = coords.alphaB.transpose();
  c.block(1, 1, sa - 1, sb - 1) = coords.beta;
  return reconstruct(c, dims);
}

Matrix apply_local_orthogonal(const BipartiteState& rho, const RealMatrix& oa,
                              const RealMatrix& ob) {
  const int sa = rho.dims.na * rho.dims.na, sb = rho.dims.nb * rho.dims.nb;
  if (oa.rows() != sa || oa.cols() != sa || ob.rows() != sb ||
      ob.cols() != sb) {
    throw Error(Errc::DimsMismatch,
                "rotation sizes must be nA^2 and nB^2");
  }
  const double dev_a =
      (oa.transpose() * oa - RealMatrix::Identity(sa, sa)).cwiseAbs().maxCoeff();
  const double dev_b =
      (ob.transpose() * ob - RealMatrix::Identity(sb, sb)).cwiseAbs().maxCoeff();
  if (dev_a > tol::kOrthogonal || dev_b > tol::kOrthogonal) {
    throw Error(Errc::NotOrthogonal,
                "rotation matrices are not orthogonal within 1e-10");
  }
  const RealMatrix c = coefficient_matrix(rho.mat, rho.dims);
  return reconstruct(oa * c * ob.transpose(), rho.dims);
}

long class_dimension(int d, const std::vector<int>& multiplicities) {
  if (d < 1) {
    throw Error(Errc::OutOfRange, "class_dimension requires d >= 1");
  }
  long sum = 0, pairs = 0;
  for (int m : multiplicities) {
    if (m < 1) {
      throw Error(Errc::OutOfRange, "multiplicities must be >= 1");
    }
    sum += m;
    pairs += static_cast<long>(m) * (m - 1) / 2;
  }
  if (sum > d) {
    throw Error(Errc::OutOfRange, "multiplicities sum exceeds d");
  }
  return static_cast<long>(d) * (d - 1) - 1 - pairs;
}

double trace_variation(const BlochCoords& coords, const RealVector& epsA,
                       const RealVector& epsB) {
  if (epsA.size() != coords.alphaA.size() ||
      epsB.size() != coords.alphaB.size()) {
    throw Error(Errc::DimsMismatch,
                "epsilon lengths do not match coordinate lengths");
  }
  return coords.alphaA.dot(epsA) + coords.alphaB.dot(epsB) +
         epsA.dot(coords.beta * epsB);
}

RealMatrix random_orthogonal(int n, uint64_t seed) {
  Rng rng(seed);
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  }
  return q;
}

Matrix random_unitary(int n, uint64_t seed) {
  Rng rng(seed);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) q.col(i) *= rii / mag;
  }
  return q;
}

}  // namespace rckit
