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

#include "rckit/criteria.hpp"
#include "rckit/ppt.hpp"
#include "rckit/states.hpp"
#include "test_util.hpp"

using namespace rckit;
using rckit_test::max_abs_diff;
using rckit_test::thrown_code;

TEST_CASE("werner states are valid and interpolate correctly") {
  const BipartiteState mixed = werner(0.0);
  CHECK(max_abs_diff(mixed.mat, Matrix::Identity(4, 4) / 4.0) < 1e-15);
  const BipartiteState phi = werner(1.0);
  CHECK(max_abs_diff(phi.mat, max_entangled(2).mat) < 1e-15);
  CHECK(purity(werner(0.5)) == doctest::Approx(0.4375).epsilon(1e-12));
  CHECK(thrown_code([] { werner(-0.01); }) == Errc::OutOfRange);
  CHECK(thrown_code([] { werner(1.01); }) == Errc::OutOfRange);
}

TEST_CASE("werner closed forms match the SVD pipeline") {
  for (double p : {0.0, 0.1, 1.0 / 3.0, 0.5, 0.75, 1.0}) {
    const RealVector closed = werner_polys(p).values;
    const RealVector pipeline =
        symmetric_polys(schmidt_spectrum(werner(p))).values;
    CHECK(max_abs_diff(closed, pipeline) < 1e-12);
  }
  const RealVector critical = werner_polys(1.0 / 3.0).values;
  CHECK(critical[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(critical[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(critical[2] == doctest::Approx(5.0 / 108.0).epsilon(1e-14));
  CHECK(critical[3] == doctest::Approx(1.0 / 432.0).epsilon(1e-14));
}

TEST_CASE("max_entangled has trace norm n") {
  for (int n : {2, 3}) {
    const SchmidtSpectrum s = schmidt_spectrum(max_entangled(n));
    CHECK(s.values.sum() == doctest::Approx(double(n)).epsilon(1e-12));
  }
}

TEST_CASE("random_pure is pure and reproducible") {
  const BipartiteState a = random_pure(Dims(2, 3), 3);
  CHECK(purity(a) == doctest::Approx(1.0).epsilon(1e-12));
  const BipartiteState b = random_pure(Dims(2, 3), 3);
  CHECK(max_abs_diff(a.mat, b.mat) == 0.0);
  const BipartiteState c = random_pure(Dims(2, 3), 4);
  CHECK(max_abs_diff(a.mat, c.mat) > 1e-3);
}

TEST_CASE("random_density is valid and reproducible") {
  const BipartiteState a = random_density(Dims(3, 3), 8);
  const BipartiteState b = random_density(Dims(3, 3), 8);
  CHECK(max_abs_diff(a.mat, b.mat) == 0.0);
  CHECK(std::abs(a.mat.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("assemble_separable mixes pure products") {
  SeparableRecipe recipe;
  recipe.weights = RealVector(2);
  recipe.weights << 0.25, 0.75;
  Vector a0(2), a1(2), b0(2), b1(2);
  a0 << 1.0, 0.0;
  a1 << 0.0, 1.0;
  b0 << 1.0, 0.0;
  b1 << Complex(0, 0), Complex(0, 1);
  recipe.factorsA = {a0, a1};
  recipe.factorsB = {b0, b1};
  const BipartiteState rho = assemble_separable(recipe, Dims(2, 2));
  CHECK(rho.mat(0, 0).real() == doctest::Approx(0.25));
  CHECK(rho.mat(3, 3).real() == doctest::Approx(0.75));
  CHECK(is_separable_2xN(rho));
}

TEST_CASE("assemble_separable rejects non-distributions") {
  SeparableRecipe recipe;
  recipe.weights = RealVector(1);
  recipe.weights << 2.0;
  Vector a(2), b(2);
  a << 1.0, 0.0;
  b << 1.0, 0.0;
  recipe.factorsA = {a};
  recipe.factorsB = {b};
  CHECK(thrown_code([&] { assemble_separable(recipe, Dims(2, 2)); }) ==
        Errc::NotUnitTrace);
}

TEST_CASE("default separable term count is the Caratheodory bound") {
  CHECK(default_separable_terms(Dims(2, 2)) == 16);
  CHECK(default_separable_terms(Dims(2, 3)) == 36);
}

TEST_CASE("random_separable returns a matching recipe") {
  for (const Dims& dims : {Dims(2, 2), Dims(2, 3)}) {
    const auto [rho, recipe] = random_separable(dims, 0, 99);
    CHECK(static_cast<int>(recipe.weights.size()) ==
          default_separable_terms(dims));
    CHECK(recipe.weights.minCoeff() >= 0.0);
    CHECK(recipe.weights.sum() == doctest::Approx(1.0).epsilon(1e-12));
    const BipartiteState rebuilt = assemble_separable(recipe, dims);
    CHECK(max_abs_diff(rho.mat, rebuilt.mat) < 1e-14);
    CHECK(is_separable_2xN(rho));
  }
}

TEST_CASE("random_separable never violates the realignment criterion") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const auto [rho, recipe] = random_separable(Dims(2, 2), 4, seed);
    CHECK(rc_check(rho).outcome == Outcome::Inconclusive);
  }
}
