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

#include "rckit/ppt.hpp"
#include "rckit/states.hpp"
#include "test_util.hpp"

using namespace rckit;
using rckit_test::max_abs_diff;
using rckit_test::thrown_code;

namespace {

// Independent oracle for the partial transpose on A, iterating the output.
Matrix pt_a_oracle(const Matrix& mat, const Dims& dims) {
  const int na = dims.na, nb = dims.nb;
  Matrix out(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int a = 0; a < nb; ++a)
      for (int j = 0; j < na; ++j)
        for (int b = 0; b < nb; ++b)
          out(i * nb + a, j * nb + b) = mat(j * nb + a, i * nb + b);
  return out;
}

}  // namespace

TEST_CASE("partial_transpose matches the index oracle") {
  for (const Dims& dims : {Dims(2, 2), Dims(2, 3), Dims(3, 2)}) {
    const BipartiteState rho = random_density(dims, 17);
    CHECK(max_abs_diff(partial_transpose(rho, Subsystem::A),
                       pt_a_oracle(rho.mat, dims)) == 0.0);
  }
}

TEST_CASE("partial transposes compose to full transpose") {
  const BipartiteState rho = random_density(Dims(2, 3), 23);
  const Matrix pa = partial_transpose(rho, Subsystem::A);
  const Matrix pb = partial_transpose(rho, Subsystem::B);
  CHECK(max_abs_diff(pa, Matrix(pb.transpose())) < 1e-14);
}

TEST_CASE("partial transpose preserves trace and hermiticity") {
  const BipartiteState rho = random_density(Dims(2, 3), 29);
  const Matrix pt = partial_transpose(rho, Subsystem::A);
  CHECK(std::abs(pt.trace().real() - 1.0) < 1e-12);
  CHECK(max_abs_diff(pt, Matrix(pt.adjoint())) < 1e-14);
}

TEST_CASE("Werner partial transpose spectrum is analytic") {
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9}) {
    const PptReport report = ppt_report(werner(p));
    CHECK(report.minEigenvalue ==
          doctest::Approx((1.0 - 3.0 * p) / 4.0).epsilon(1e-10));
    CHECK(report.isPpt == (p <= 1.0 / 3.0 + 1e-9));
  }
}

TEST_CASE("separable products always pass PPT") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const auto [rho, recipe] = random_separable(Dims(2, 3), 8, seed);
    CHECK(ppt_report(rho).isPpt);
  }
}

TEST_CASE("is_separable_2xN decides low dimensions") {
  CHECK(is_separable_2xN(werner(0.2)));
  CHECK_FALSE(is_separable_2xN(werner(0.5)));
  CHECK(thrown_code([] {
          is_separable_2xN(random_density(Dims(3, 3), 5));
        }) == Errc::UnsupportedDims);
}
