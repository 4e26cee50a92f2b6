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

#include "rckit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace rckit {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnitTrace: return "NotUnitTrace";
    case Errc::NotPositive: return "NotPositive";
    case Errc::SvdFailure: return "SvdFailure";
    case Errc::EigenFailure: return "EigenFailure";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DimsMismatch: return "DimsMismatch";
    case Errc::NotSquareRealignment: return "NotSquareRealignment";
    case Errc::UnsupportedDims: return "UnsupportedDims";
    case Errc::NotCpt: return "NotCpt";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

BipartiteState validate_density(const Matrix& mat, const Dims& dims) {
  const int n = dims.total();
  if (mat.rows() != n || mat.cols() != n) {
    throw Error(Errc::DimensionMismatch,
                "matrix is " + std::to_string(mat.rows()) + "x" +
                    std::to_string(mat.cols()) + ", dims (" +
                    std::to_string(dims.na) + "," + std::to_string(dims.nb) +
                    ") require " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
  if (!mat.allFinite()) {
    throw Error(Errc::DimensionMismatch, "matrix has non-finite entries");
  }
  const double asym = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermitian) {
    throw Error(Errc::NotHermitian, "max |rho - rho^dagger| = " +
                                        std::to_string(asym) + " exceeds " +
                                        std::to_string(tol::kHermitian));
  }
  Matrix sym = 0.5 * (mat + mat.adjoint().eval());
  const double tr = sym.trace().real();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw Error(Errc::NotUnitTrace,
                "trace = " + std::to_string(tr) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym,
                                           Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(Errc::EigenFailure, "eigensolver did not converge");
  }
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::kPsd) {
    throw Error(Errc::NotPositive, "most negative eigenvalue is " +
                                       std::to_string(min_eig));
  }
  return BipartiteState{dims, std::move(sym)};
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Matrix partial_trace_raw(const Matrix& mat, const Dims& dims,
                         Subsystem traced_out) {
  const int na = dims.na, nb = dims.nb;
  if (traced_out == Subsystem::A) {
    Matrix out = Matrix::Zero(nb, nb);
    for (int a = 0; a < na; ++a)
      for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = 0; b2 < nb; ++b2)
          out(b1, b2) += mat(a * nb + b1, a * nb + b2);
    return out;
  }
  Matrix out = Matrix::Zero(na, na);
  for (int b = 0; b < nb; ++b)
    for (int a1 = 0; a1 < na; ++a1)
      for (int a2 = 0; a2 < na; ++a2)
        out(a1, a2) += mat(a1 * nb + b, a2 * nb + b);
  return out;
}

Matrix partial_trace(const BipartiteState& rho, Subsystem traced_out) {
  return partial_trace_raw(rho.mat, rho.dims, traced_out);
}

double purity(const BipartiteState& rho) {
  return (rho.mat * rho.mat).trace().real();
}

}  // namespace rckit
