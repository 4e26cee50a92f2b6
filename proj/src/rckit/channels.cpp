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

#include "rckit/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "rckit/ppt.hpp"
#include "rckit/schmidt.hpp"
#include "rckit/states.hpp"

namespace rckit {

namespace {

void check_shape(const ChannelMatrix& ch) {
  if (ch.nIn < 2 || ch.nOut < 2) {
    throw Error(Errc::OutOfRange, "channel dimensions must be at least 2");
  }
  if (ch.mat.rows() != ch.nOut * ch.nOut ||
      ch.mat.cols() != ch.nIn * ch.nIn) {
    throw Error(Errc::DimensionMismatch,
                "channel matrix must be nOut^2 x nIn^2");
  }
}

Matrix choi_matrix(const ChannelMatrix& ch) {
  const int ni = ch.nIn, no = ch.nOut;
  Matrix rho(no * ni, no * ni);
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j)
      for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b)
          rho(i * ni + a, j * ni + b) =
              ch.mat(i * no + j, a * ni + b) / double(ni);
  return rho;
}

}  // namespace

BipartiteState choi_state(const ChannelMatrix& ch) {
  check_shape(ch);
  try {
    return validate_density(choi_matrix(ch), Dims(ch.nOut, ch.nIn));
  } catch (const Error& e) {
    throw Error(Errc::NotCpt, std::string("Choi state is not a density "
                                          "matrix (") +
                                  errc_name(e.code()) + "): " + e.what());
  }
}

ChannelMatrix channel_of_state(const BipartiteState& rho) {
  return ChannelMatrix{rho.dims.nb, rho.dims.na,
                       double(rho.dims.nb) * realign_raw(rho.mat, rho.dims)};
}

void validate_cpt(const ChannelMatrix& ch) {
  const BipartiteState choi = choi_state(ch);
  const Matrix marginal = partial_trace(choi, Subsystem::A);
  const double dev =
      (marginal - Matrix::Identity(ch.nIn, ch.nIn) / ch.nIn)
          .cwiseAbs()
          .maxCoeff();
  if (dev > 1e-9) {
    throw Error(Errc::NotCpt, "channel is not trace-preserving: "
                              "max |tr_A(choi) - I/nIn| = " +
                                  std::to_string(dev));
  }
}

SchmidtSpectrum channel_spectrum(const ChannelMatrix& ch) {
  check_shape(ch);
  const int d = std::min(ch.nOut * ch.nOut, ch.nIn * ch.nIn);
  RealVector values = singular_values(ch.mat, d);
  int rank = 0;
  const double top = values.size() ? values[0] : 0.0;
  if (top > 0.0) {
    for (int i = 0; i < values.size(); ++i) {
      if (values[i] > tol::kRank * top) ++rank;
    }
  }
  return SchmidtSpectrum{std::move(values), rank};
}

Verdict eb_necessary_check(const ChannelMatrix& ch) {
  validate_cpt(ch);
  const SchmidtSpectrum spec = channel_spectrum(ch);
  const RealVector polys = elementary_symmetric(spec.values);
  const int R = spec.rank;
  int closest = 1;
  double closest_margin = -1e300;
  for (int l = 1; l <= R; ++l) {
    const double value = polys[l - 1];
    const double bound =
        rank_bound(R, l) * std::pow(double(ch.nIn), l);
    if (value > bound + tol::kVerdict) {
      return Verdict{Outcome::Entangled, l, value, bound};
    }
    if (value - bound > closest_margin) {
      closest_margin = value - bound;
      closest = l;
    }
  }
  const double closest_bound =
      rank_bound(R, closest) * std::pow(double(ch.nIn), closest);
  return Verdict{Outcome::Inconclusive, closest, polys[closest - 1],
                 closest_bound};
}

bool is_eb_2xN(const ChannelMatrix& ch) {
  return is_separable_2xN(choi_state(ch));
}

ChannelMatrix random_cpt_channel(int nOut, int nIn, uint64_t seed) {
  const Dims dims(nOut, nIn);
  const BipartiteState raw = random_density(dims, seed);
  const Matrix sigma = partial_trace(raw, Subsystem::A);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
  if (es.info() != Eigen::Success) {
    throw Error(Errc::EigenFailure, "eigensolver did not converge");
  }
  RealVector inv_sqrt = es.eigenvalues();
  for (int i = 0; i < inv_sqrt.size(); ++i) {
    inv_sqrt[i] = 1.0 / std::sqrt(inv_sqrt[i]);
  }
  const Matrix s =
      es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
  const Matrix t = tensor_product(Matrix::Identity(nOut, nOut), s);
  Matrix rho = t * raw.mat * t.adjoint() / nIn;
  rho = 0.5 * (rho + rho.adjoint().eval());
  return channel_of_state(validate_density(rho, dims));
}

}  // namespace rckit
