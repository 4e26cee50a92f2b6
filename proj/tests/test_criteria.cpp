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
#include "rckit/geometry.hpp"
#include "rckit/rng.hpp"
#include "rckit/states.hpp"
#include "test_util.hpp"

using namespace rckit;
using rckit_test::max_abs_diff;
using rckit_test::thrown_code;

namespace {

// Brute-force oracle: e_l as an explicit sum over all size-l subsets.
RealVector subset_sym_polys(const RealVector& lambda) {
  const int d = static_cast<int>(lambda.size());
  RealVector out = RealVector::Zero(d);
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    double prod = 1.0;
    int bits = 0;
    for (int k = 0; k < d; ++k) {
      if (mask & (1u << k)) {
        prod *= lambda[k];
        ++bits;
      }
    }
    out[bits - 1] += prod;
  }
  return out;
}

}  // namespace

TEST_CASE("elementary_symmetric matches hand values") {
  RealVector lambda(3);
  lambda << 1.0, 2.0, 3.0;
  const RealVector e = elementary_symmetric(lambda);
  CHECK(e[0] == doctest::Approx(6.0));
  CHECK(e[1] == doctest::Approx(11.0));
  CHECK(e[2] == doctest::Approx(6.0));
}

TEST_CASE("elementary_symmetric matches subset enumeration") {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + int(rng.uniform() * 6.0);
    RealVector lambda(d);
    for (int i = 0; i < d; ++i) lambda[i] = rng.uniform(0.0, 2.0);
    CHECK(max_abs_diff(elementary_symmetric(lambda),
                       subset_sym_polys(lambda)) < 1e-12);
  }
}

TEST_CASE("charpoly route agrees with the recurrence") {
  const BipartiteState rho = werner(0.5);
  const RealVector via_charpoly = charpoly_coeffs(rho);
  const RealVector via_recurrence =
      symmetric_polys(schmidt_spectrum(rho)).values;
  CHECK(max_abs_diff(via_charpoly, via_recurrence) < 1e-12);
}

TEST_CASE("charpoly_sym_polys matches on a PSD matrix") {
  Rng rng(55);
  RealVector lambda(4);
  for (int i = 0; i < 4; ++i) lambda[i] = rng.uniform(0.0, 1.5);
  const Matrix u = random_unitary(4, 56);
  const Matrix psd = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  CHECK(max_abs_diff(charpoly_sym_polys(psd),
                     subset_sym_polys(lambda)) < 1e-10);
}

TEST_CASE("charpoly_coeffs needs square realignment") {
  CHECK(thrown_code([] { charpoly_coeffs(random_density(Dims(2, 3), 1)); }) ==
        Errc::NotSquareRealignment);
}

TEST_CASE("naive bounds for d = 4") {
  CHECK(naive_bound(4, 1) == doctest::Approx(1.0));
  CHECK(naive_bound(4, 2) == doctest::Approx(0.375));
  CHECK(naive_bound(4, 3) == doctest::Approx(0.0625));
  CHECK(naive_bound(4, 4) == doctest::Approx(0.00390625));
  CHECK(thrown_code([] { naive_bound(4, 0); }) == Errc::OutOfRange);
  CHECK(thrown_code([] { naive_bound(4, 5); }) == Errc::OutOfRange);
}

TEST_CASE("rank bounds vanish above the rank") {
  CHECK(rank_bound(2, 1) == doctest::Approx(1.0));
  CHECK(rank_bound(2, 2) == doctest::Approx(0.25));
  CHECK(rank_bound(2, 3) == 0.0);
}

TEST_CASE("naive_table fields") {
  const BoundTable t = naive_table(Dims(2, 3));
  CHECK(t.kind == BoundKind::Naive);
  CHECK(t.bounds.size() == 4);
  CHECK(t.bounds[0] == doctest::Approx(1.0));
  CHECK(t.provenance.origin == "analytic");
}

TEST_CASE("builtin 2x2 strict table") {
  const BoundTable t = builtin_strict_table_2x2();
  CHECK(t.kind == BoundKind::StrictSeparable);
  CHECK(t.bounds[0] == doctest::Approx(1.0));
  CHECK(t.bounds[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(t.bounds[2] == doctest::Approx(5.0 / 108.0).epsilon(1e-14));
  CHECK(t.bounds[3] == doctest::Approx(1.0 / 432.0).epsilon(1e-14));
  const BoundTable naive = naive_table(Dims(2, 2));
  for (int l = 0; l < 4; ++l) CHECK(t.bounds[l] <= naive.bounds[l] + 1e-15);
  CHECK(t.provenance.origin == "analytic");
}

TEST_CASE("bound kind names round trip") {
  for (BoundKind kind : {BoundKind::Naive, BoundKind::RankRestricted,
                         BoundKind::StrictSeparable,
                         BoundKind::StrictRcBall}) {
    CHECK(bound_kind_from_name(bound_kind_name(kind)) == kind);
  }
  CHECK(thrown_code([] { bound_kind_from_name("nope"); }) ==
        Errc::ParseError);
}

TEST_CASE("rc_check fires exactly above trace norm one") {
  const Verdict hot = rc_check(werner(0.5));
  CHECK(hot.outcome == Outcome::Entangled);
  CHECK(hot.l == 1);
  CHECK(hot.value == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(hot.bound == doctest::Approx(1.0));

  const Verdict cold = rc_check(werner(0.2));
  CHECK(cold.outcome == Outcome::Inconclusive);
  CHECK(cold.value == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("rcl_check reports the smallest violating degree") {
  BoundTable tight = naive_table(Dims(2, 2));
  tight.bounds[1] = 0.01;
  tight.bounds[2] = 0.001;
  const Verdict v = rcl_check(werner(0.3), tight);
  CHECK(v.outcome == Outcome::Entangled);
  CHECK(v.l == 2);
  CHECK(v.value == doctest::Approx(3.0 * (0.3 + 0.09) / 4.0).epsilon(1e-12));
  CHECK(v.bound == doctest::Approx(0.01));
}

TEST_CASE("rcl_check reports the closest margin when inconclusive") {
  const Verdict v = rcl_check(werner(0.2), naive_table(Dims(2, 2)));
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(v.l >= 1);
  CHECK(v.value <= v.bound);
}

TEST_CASE("rcl_check rejects mismatched tables") {
  CHECK(thrown_code([] {
          rcl_check(werner(0.2), naive_table(Dims(2, 3)));
        }) == Errc::DimsMismatch);
  BoundTable short_table = naive_table(Dims(2, 2));
  short_table.bounds = short_table.bounds.head(2);
  CHECK(thrown_code([&] { rcl_check(werner(0.2), short_table); }) ==
        Errc::DimsMismatch);
}
