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

#include <doctest.h>

#include "rckit/geometry.hpp"
#include "rckit/rng.hpp"
#include "rckit/schmidt.hpp"
#include "rckit/states.hpp"
#include "test_util.hpp"

using namespace rckit;
using rckit_test::max_abs_diff;
using rckit_test::thrown_code;

namespace {

// Independent realignment oracle: iterates output coordinates and decodes
// them, instead of iterating input indices like the implementation.
Matrix realign_oracle(const Matrix& mat, const Dims& dims) {
  const int na = dims.na, nb = dims.nb;
  Matrix out(na * na, nb * nb);
  for (int r = 0; r < na * na; ++r) {
    const int m = r / na, n = r % na;
    for (int c = 0; c < nb * nb; ++c) {
      const int mu = c / nb, nu = c % nb;
      out(r, c) = mat(m * nb + mu, n * nb + nu);
    }
  }
  return out;
}

Matrix random_matrix(int rows, int cols, uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

}  // namespace

TEST_CASE("realign matches the index oracle") {
  for (const Dims& dims :
       {Dims(2, 2), Dims(2, 3), Dims(3, 2), Dims(3, 3)}) {
    const int n = dims.total();
    const Matrix m = random_matrix(n, n, 100 + dims.na * 10 + dims.nb);
    CHECK(max_abs_diff(realign_raw(m, dims), realign_oracle(m, dims)) ==
          0.0);
  }
}

TEST_CASE("realign is an involution on square dims") {
  for (const Dims& dims : {Dims(2, 2), Dims(3, 3)}) {
    const int n = dims.total();
    const Matrix m = random_matrix(n, n, 7 + n);
    const Matrix once = realign_raw(m, dims);
    CHECK(max_abs_diff(realign_raw(once, dims), m) == 0.0);
  }
}

TEST_CASE("realigned shape is nA^2 x nB^2") {
  const BipartiteState rho = random_density(Dims(2, 3), 5);
  const RealignedMatrix r = realign(rho);
  CHECK(r.mat.rows() == 4);
  CHECK(r.mat.cols() == 9);
}

TEST_CASE("maximally entangled state realigns to I/n") {
  for (int n : {2, 3}) {
    const BipartiteState phi = max_entangled(n);
    const Matrix r = realign(phi).mat;
    CHECK(max_abs_diff(r, Matrix::Identity(n * n, n * n) / double(n)) <
          1e-14);
    const SchmidtSpectrum s = schmidt_spectrum(phi);
    CHECK(s.rank == n * n);
    CHECK(s.values.sum() == doctest::Approx(double(n)).epsilon(1e-12));
  }
}

TEST_CASE("pure product states have Schmidt rank one") {
  Rng rng(42);
  for (const Dims& dims : {Dims(2, 2), Dims(2, 3)}) {
    Vector a(dims.na), b(dims.nb);
    for (int i = 0; i < dims.na; ++i) a[i] = rng.complex_normal();
    for (int i = 0; i < dims.nb; ++i) b[i] = rng.complex_normal();
    a.normalize();
    b.normalize();
    Vector v(dims.total());
    for (int p = 0; p < dims.na; ++p)
      for (int q = 0; q < dims.nb; ++q) v[p * dims.nb + q] = a[p] * b[q];
    const BipartiteState rho =
        validate_density(Matrix(v * v.adjoint()), dims);
    const SchmidtSpectrum s = schmidt_spectrum(rho);
    CHECK(s.rank == 1);
    CHECK(s.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.values.tail(s.values.size() - 1).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("product of mixed states realigns to a rank-one outer product") {
  const Matrix rho_a = random_density(Dims(2, 2), 31).mat;
  const Matrix rho_b = random_density(Dims(2, 2), 32).mat;
  // Interpret the 4x4 factors as single parties of a (4,4) system.
  const BipartiteState joint =
      validate_density(tensor_product(rho_a, rho_b), Dims(4, 4));
  const SchmidtSpectrum s = schmidt_spectrum(joint);
  CHECK(s.rank == 1);
  CHECK(s.values[0] ==
        doctest::Approx(rho_a.norm() * rho_b.norm()).epsilon(1e-12));
}

TEST_CASE("spectrum is padded to d and clamped at zero") {
  const BipartiteState mixed =
      validate_density(Matrix::Identity(6, 6) / 6.0, Dims(2, 3));
  const SchmidtSpectrum s = schmidt_spectrum(mixed);
  CHECK(s.values.size() == 4);
  CHECK(s.rank == 1);
  CHECK(s.values.minCoeff() >= 0.0);
  CHECK(s.values[0] == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("singular_values handles zero matrices") {
  const RealVector sv = singular_values(Matrix::Zero(3, 3));
  CHECK(sv.size() == 3);
  CHECK(sv.maxCoeff() == 0.0);
  CHECK(schmidt_spectrum_raw(Matrix::Zero(4, 4), Dims(2, 2)).rank == 0);
}

TEST_CASE("trace_norm_realigned sums the spectrum") {
  const BipartiteState rho = random_density(Dims(2, 3), 77);
  const SchmidtSpectrum s = schmidt_spectrum(rho);
  CHECK(trace_norm_realigned(rho) ==
        doctest::Approx(s.values.sum()).epsilon(1e-12));
}

TEST_CASE("spectrum is invariant under local unitaries") {
  for (const Dims& dims : {Dims(2, 2), Dims(2, 3)}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      const BipartiteState rho = random_density(dims, 1000 + seed);
      const Matrix ua = random_unitary(dims.na, 2000 + seed);
      const Matrix ub = random_unitary(dims.nb, 3000 + seed);
      const Matrix u = tensor_product(ua, ub);
      const BipartiteState rotated =
          validate_density(Matrix(u * rho.mat * u.adjoint()), dims);
      CHECK(max_abs_diff(schmidt_spectrum(rho).values,
                         schmidt_spectrum(rotated).values) < 1e-10);
    }
  }
}
