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

#include "rckit/schmidt.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace rckit {

Matrix realign_raw(const Matrix& mat, const Dims& dims) {
  const int na = dims.na, nb = dims.nb;
  Matrix out(na * na, nb * nb);
  for (int m = 0; m < na; ++m)
    for (int n = 0; n < na; ++n)
      for (int mu = 0; mu < nb; ++mu)
        for (int nu = 0; nu < nb; ++nu)
          out(m * na + n, mu * nb + nu) = mat(m * nb + mu, n * nb + nu);
  return out;
}

RealignedMatrix realign(const BipartiteState& rho) {
  return RealignedMatrix{rho.dims, realign_raw(rho.mat, rho.dims)};
}

RealVector singular_values(const Matrix& mat, int pad) {
  Eigen::JacobiSVD<Matrix> svd(mat);
  if (svd.info() != Eigen::Success) {
    throw Error(Errc::SvdFailure, "SVD did not converge");
  }
  RealVector sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  const int len = std::max(pad, n);
  RealVector out = RealVector::Zero(len);
  for (int i = 0; i < n; ++i) {
    out[i] = sv[i] < tol::kSvClamp ? 0.0 : sv[i];
  }
  return out;
}

SchmidtSpectrum schmidt_spectrum_raw(const Matrix& mat, const Dims& dims) {
  RealVector values = singular_values(realign_raw(mat, dims), dims.d());
  int rank = 0;
  const double top = values.size() ? values[0] : 0.0;
  if (top > 0.0) {
    for (int i = 0; i < values.size(); ++i) {
      if (values[i] > tol::kRank * top) ++rank;
    }
  }
  return SchmidtSpectrum{std::move(values), rank};
}

SchmidtSpectrum schmidt_spectrum(const BipartiteState& rho) {
  return schmidt_spectrum_raw(rho.mat, rho.dims);
}

double trace_norm_realigned(const BipartiteState& rho) {
  return schmidt_spectrum(rho).values.sum();
}

}  // namespace rckit
