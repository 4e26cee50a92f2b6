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

#include "rckit/ppt.hpp"

#include <Eigen/Eigenvalues>

namespace rckit {

Matrix partial_transpose(const BipartiteState& rho, Subsystem sub) {
  const int na = rho.dims.na, nb = rho.dims.nb;
  Matrix out(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
          out(i * nb + a, j * nb + b) = rho.mat(j * nb + a, i * nb + b);
  if (sub == Subsystem::B) {
    // T_B = T after T_A; spectra of the two partial transposes coincide.
    return out.transpose().eval();
  }
  return out;
}

PptReport ppt_report(const BipartiteState& rho) {
  Matrix pt = partial_transpose(rho, Subsystem::A);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(Errc::EigenFailure, "eigensolver did not converge");
  }
  const double min_eig = es.eigenvalues().minCoeff();
  return PptReport{min_eig, min_eig >= -tol::kPsd};
}

bool is_separable_2xN(const BipartiteState& rho) {
  const int na = rho.dims.na, nb = rho.dims.nb;
  const bool low_dim = (na == 2 && nb == 2) || (na == 2 && nb == 3) ||
                       (na == 3 && nb == 2);
  if (!low_dim) {
    throw Error(Errc::UnsupportedDims,
                "PPT is an exact separability oracle only in 2x2 and 2x3");
  }
  return ppt_report(rho).isPpt;
}

}  // namespace rckit
