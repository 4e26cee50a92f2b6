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

#include "rckit/criteria.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace rckit {

const char* bound_kind_name(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::Naive: return "naive";
    case BoundKind::RankRestricted: return "rank-restricted";
    case BoundKind::StrictSeparable: return "strict-separable";
    case BoundKind::StrictRcBall: return "strict-rc-ball";
  }
  return "unknown";
}

BoundKind bound_kind_from_name(const std::string& name) {
  if (name == "naive") return BoundKind::Naive;
  if (name == "rank-restricted") return BoundKind::RankRestricted;
  if (name == "strict-separable") return BoundKind::StrictSeparable;
  if (name == "strict-rc-ball") return BoundKind::StrictRcBall;
  throw Error(Errc::ParseError, "unknown bound table kind: " + name);
}

RealVector elementary_symmetric(const RealVector& lambda) {
  const int d = static_cast<int>(lambda.size());
  // e[k] accumulates the degree-k coefficient of Prod_k (1 + lambda_k t).
  RealVector e = RealVector::Zero(d + 1);
  e[0] = 1.0;
  for (int i = 0; i < d; ++i) {
    const double x = lambda[i];
    for (int k = std::min(i + 1, d); k >= 1; --k) {
      e[k] += x * e[k - 1];
    }
  }
  return e.tail(d);
}

SymmetricPolys symmetric_polys(const SchmidtSpectrum& s) {
  return SymmetricPolys{elementary_symmetric(s.values)};
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

}  // namespace

double naive_bound(int d, int l) {
  if (l < 1 || l > d) {
    throw Error(Errc::OutOfRange, "naive_bound requires 1 <= l <= d");
  }
  return binomial(d, l) * std::pow(1.0 / d, l);
}

double rank_bound(int R, int l) {
  if (l < 1 || R < 1) {
    throw Error(Errc::OutOfRange, "rank_bound requires l >= 1 and R >= 1");
  }
  if (l > R) return 0.0;
  return binomial(R, l) * std::pow(1.0 / R, l);
}

BoundTable naive_table(const Dims& dims) {
  const int d = dims.d();
  RealVector b(d);
  for (int l = 1; l <= d; ++l) b[l - 1] = naive_bound(d, l);
  return BoundTable{dims, BoundKind::Naive, std::move(b),
                    Provenance{"analytic", ""}};
}

BoundTable builtin_strict_table_2x2() {
  RealVector b(4);
  b << 1.0, 1.0 / 3.0, 5.0 / 108.0, 1.0 / 432.0;
  return BoundTable{Dims(2, 2), BoundKind::StrictSeparable, std::move(b),
                    Provenance{"analytic", ""}};
}

Verdict rc_check(const BipartiteState& rho) {
  const double m1 = trace_norm_realigned(rho);
  if (m1 > 1.0 + tol::kVerdict) {
    return Verdict{Outcome::Entangled, 1, m1, 1.0};
  }
  return Verdict{Outcome::Inconclusive, 1, m1, 1.0};
}

Verdict rcl_check(const BipartiteState& rho, const BoundTable& table) {
  if (table.dims != rho.dims) {
    throw Error(Errc::DimsMismatch,
                "bound table dims do not match state dims");
  }
  const SymmetricPolys polys = symmetric_polys(schmidt_spectrum(rho));
  const int d = rho.dims.d();
  if (table.bounds.size() != d) {
    throw Error(Errc::DimsMismatch, "bound table has wrong length");
  }
  int closest = 1;
  double closest_margin = -1e300;
  for (int l = 1; l <= d; ++l) {
    const double value = polys.values[l - 1];
    const double bound = table.bounds[l - 1];
    if (value > bound + tol::kVerdict) {
      return Verdict{Outcome::Entangled, l, value, bound};
    }
    if (value - bound > closest_margin) {
      closest_margin = value - bound;
      closest = l;
    }
  }
  return Verdict{Outcome::Inconclusive, closest, polys.values[closest - 1],
                 table.bounds[closest - 1]};
}

RealVector charpoly_sym_polys(const Matrix& hermitian_psd) {
  const int d = static_cast<int>(hermitian_psd.rows());
  // Faddeev-LeVerrier: c_k coefficients of det(xI - A), e_l = (-1)^l c_l.
  Matrix m = Matrix::Identity(d, d);
  RealVector out(d);
  double sign = -1.0;
  for (int k = 1; k <= d; ++k) {
    Matrix n = hermitian_psd * m;
    const double c = -n.trace().real() / k;
    m = n + c * Matrix::Identity(d, d);
    out[k - 1] = sign * c;
    sign = -sign;
  }
  return out;
}

RealVector charpoly_coeffs(const BipartiteState& rho) {
  if (rho.dims.na != rho.dims.nb) {
    throw Error(Errc::NotSquareRealignment,
                "charpoly route requires nA = nB");
  }
  const Matrix r = realign_raw(rho.mat, rho.dims);
  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw Error(Errc::SvdFailure, "SVD did not converge");
  }
  // |rho^R| = V Sigma V^dagger.
  const Matrix abs_r = svd.matrixV() *
                       svd.singularValues().asDiagonal() *
                       svd.matrixV().adjoint();
  return charpoly_sym_polys(abs_r);
}

}  // namespace rckit
