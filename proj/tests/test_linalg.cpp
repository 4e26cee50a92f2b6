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

#include "rckit/linalg.hpp"
#include "rckit/states.hpp"
#include "test_util.hpp"

using namespace rckit;
using rckit_test::max_abs_diff;
using rckit_test::thrown_code;

TEST_CASE("Dims validates local dimensions") {
  CHECK(Dims(2, 3).total() == 6);
  CHECK(Dims(2, 3).d() == 4);
  CHECK(Dims(2, 3).big_d() == 9);
  CHECK(Dims(3, 2).d() == 4);
  CHECK(thrown_code([] { Dims(1, 2); }) == Errc::OutOfRange);
  CHECK(thrown_code([] { Dims(2, 0); }) == Errc::OutOfRange);
}

TEST_CASE("validate_density accepts the maximally mixed state") {
  const Dims dims(2, 2);
  const BipartiteState rho =
      validate_density(Matrix::Identity(4, 4) / 4.0, dims);
  CHECK(rho.dims == dims);
  CHECK(max_abs_diff(rho.mat, Matrix::Identity(4, 4) / 4.0) == 0.0);
}

TEST_CASE("validate_density symmetrizes tolerable asymmetry") {
  Matrix m = Matrix::Identity(4, 4) / 4.0;
  m(0, 1) = Complex(0.0, 5e-11);
  const BipartiteState rho = validate_density(m, Dims(2, 2));
  CHECK(std::abs(rho.mat(0, 1) - std::conj(rho.mat(1, 0))) == 0.0);
}

TEST_CASE("validate_density rejects malformed inputs") {
  const Dims dims(2, 2);
  CHECK(thrown_code([&] {
          validate_density(Matrix::Identity(3, 3) / 3.0, dims);
        }) == Errc::DimensionMismatch);

  Matrix skew = Matrix::Identity(4, 4) / 4.0;
  skew(0, 1) = Complex(1e-6, 0.0);
  CHECK(thrown_code([&] { validate_density(skew, dims); }) ==
        Errc::NotHermitian);

  CHECK(thrown_code([&] {
          validate_density(Matrix::Identity(4, 4) / 2.0, dims);
        }) == Errc::NotUnitTrace);

  Matrix indef = Matrix::Zero(4, 4);
  indef(0, 0) = 1.5;
  indef(1, 1) = -0.5;
  CHECK(thrown_code([&] { validate_density(indef, dims); }) ==
        Errc::NotPositive);
}

TEST_CASE("tensor_product matches the block definition") {
  Matrix a(2, 2), b(2, 2);
  a << Complex(1, 0), Complex(2, 1), Complex(0, -1), Complex(3, 0);
  b << Complex(0, 0), Complex(1, 0), Complex(1, 1), Complex(0, 2);
  const Matrix t = tensor_product(a, b);
  REQUIRE(t.rows() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(t(i, j) == a(i / 2, j / 2) * b(i % 2, j % 2));
}

TEST_CASE("partial traces undo tensor products") {
  const Matrix rho_a = random_density(Dims(2, 2), 13).mat;
  const Matrix rho_b = random_density(Dims(3, 3), 14).mat;
  const Matrix prod = tensor_product(rho_a, rho_b);
  const BipartiteState joint = validate_density(prod, Dims(4, 9));
  CHECK(max_abs_diff(partial_trace(joint, Subsystem::B), rho_a) < 1e-12);
  CHECK(max_abs_diff(partial_trace(joint, Subsystem::A), rho_b) < 1e-12);
}

TEST_CASE("partial trace preserves trace and hermiticity") {
  const BipartiteState rho = random_density(Dims(2, 3), 21);
  const Matrix ta = partial_trace(rho, Subsystem::A);
  const Matrix tb = partial_trace(rho, Subsystem::B);
  CHECK(ta.rows() == 3);
  CHECK(tb.rows() == 2);
  CHECK(std::abs(ta.trace().real() - 1.0) < 1e-12);
  CHECK(std::abs(tb.trace().real() - 1.0) < 1e-12);
  CHECK(max_abs_diff(ta, ta.adjoint()) < 1e-12);
  CHECK(max_abs_diff(tb, tb.adjoint()) < 1e-12);
}

TEST_CASE("purity spans pure to maximally mixed") {
  CHECK(purity(max_entangled(2)) == doctest::Approx(1.0).epsilon(1e-12));
  const BipartiteState mixed =
      validate_density(Matrix::Identity(6, 6) / 6.0, Dims(2, 3));
  CHECK(purity(mixed) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("errc_name covers every code") {
  CHECK(std::string(errc_name(Errc::DimensionMismatch)) ==
        "DimensionMismatch");
  CHECK(std::string(errc_name(Errc::ParseError)) == "ParseError");
  CHECK(std::string(errc_name(Errc::NotCpt)) == "NotCpt");
}
