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

#ifndef RCKIT_TYPES_HPP
#define RCKIT_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace rckit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Error categories; mirrored one-to-one by the C API status codes.
enum class Errc {
  DimensionMismatch,
  NotHermitian,
  NotUnitTrace,
  NotPositive,
  SvdFailure,
  EigenFailure,
  OutOfRange,
  DimsMismatch,
  NotSquareRealignment,
  UnsupportedDims,
  NotCpt,
  NotOrthogonal,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code) noexcept;

namespace tol {
// Max entrywise |rho - rho^dagger| accepted before symmetrization.
inline constexpr double kHermitian = 1e-10;
// |tr(rho) - 1| acceptance window.
inline constexpr double kTrace = 1e-10;
// Minimum eigenvalue threshold: psd means min_eig >= -kPsd.
inline constexpr double kPsd = 1e-9;
// Relative threshold on singular values when counting rank.
inline constexpr double kRank = 1e-9;
// Singular values below this are clamped to exactly zero.
inline constexpr double kSvClamp = 1e-12;
// Margin a functional must exceed its bound by to count as a violation.
inline constexpr double kVerdict = 1e-12;
// Orthogonality acceptance for superoperator rotations.
inline constexpr double kOrthogonal = 1e-10;
}  // namespace tol

// Local dimensions of a bipartite system.  The composite index convention is
// row-major throughout: state index i = a * nB + b for |a>|b>.
struct Dims {
  int na = 0;
  int nb = 0;

  Dims() = default;
  Dims(int nA, int nB) : na(nA), nb(nB) {
    if (nA < 2 || nB < 2) {
      throw Error(Errc::OutOfRange,
                  "local dimensions must both be at least 2, got (" +
                      std::to_string(nA) + "," + std::to_string(nB) + ")");
    }
  }

  int total() const noexcept { return na * nb; }
  // Length of the Schmidt spectrum, d = min(nA^2, nB^2).
  int d() const noexcept { return std::min(na * na, nb * nb); }
  // D = max(nA^2, nB^2).
  int big_d() const noexcept { return std::max(na * na, nb * nb); }

  bool operator==(const Dims&) const = default;
};

enum class Subsystem { A, B };

}  // namespace rckit

#endif  // RCKIT_TYPES_HPP
