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

#include "rckit/bounds.hpp"
#include "rckit/criteria.hpp"
#include "rckit/nelder_mead.hpp"
#include "rckit/ppt.hpp"
#include "rckit/schmidt.hpp"
#include "test_util.hpp"

using namespace rckit;
using rckit_test::max_abs_diff;
using rckit_test::thrown_code;

namespace {

SearchConfig small_config(SearchSet set, uint64_t seed, int restarts,
                          int iters) {
  SearchConfig config;
  config.set = set;
  config.seed = seed;
  config.restarts = restarts;
  config.itersPerRestart = iters;
  return config;
}

}  // namespace

TEST_CASE("nelder_mead_min solves smooth problems") {
  RealVector x0 = RealVector::Constant(5, 3.0);
  NmOptions opts;
  opts.maxIters = 4000;
  const NmResult quad = nelder_mead_min(
      [](const RealVector& x) {
        double s = 0.0;
        for (int i = 0; i < x.size(); ++i) {
          const double d = x[i] - (i + 1);
          s += d * d;
        }
        return s;
      },
      x0, opts);
  CHECK(quad.fx < 1e-10);
  for (int i = 0; i < 5; ++i) {
    CHECK(quad.x[i] == doctest::Approx(double(i + 1)).epsilon(1e-4));
  }

  RealVector r0(2);
  r0 << -1.2, 1.0;
  const NmResult rosen = nelder_mead_min(
      [](const RealVector& x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
      },
      r0, opts);
  CHECK(rosen.fx < 1e-8);
}

TEST_CASE("search set names round trip") {
  for (SearchSet set :
       {SearchSet::Separable, SearchSet::RcBall, SearchSet::All}) {
    CHECK(search_set_from_name(search_set_name(set)) == set);
  }
  CHECK(thrown_code([] { search_set_from_name("wat"); }) ==
        Errc::ParseError);
}

TEST_CASE("config_hash is stable and sensitive") {
  SearchConfig a;
  SearchConfig b;
  CHECK(config_hash(a) == config_hash(b));
  b.seed = 1;
  CHECK(config_hash(a) != config_hash(b));
  b = a;
  b.itersPerRestart += 1;
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("maximize rejects invalid requests") {
  const SearchConfig config = small_config(SearchSet::All, 0, 2, 200);
  CHECK(thrown_code([&] { maximize(Dims(2, 2), 0, config); }) ==
        Errc::OutOfRange);
  CHECK(thrown_code([&] { maximize(Dims(2, 2), 5, config); }) ==
        Errc::OutOfRange);
  SearchConfig bad = config;
  bad.restarts = 0;
  CHECK(thrown_code([&] { maximize(Dims(2, 2), 2, bad); }) ==
        Errc::OutOfRange);
  const SearchConfig sep = small_config(SearchSet::Separable, 0, 2, 200);
  CHECK(thrown_code([&] { maximize(Dims(3, 3), 2, sep); }) ==
        Errc::UnsupportedDims);
  CHECK(thrown_code([&] { reproduce_tables(Dims(3, 3), sep); }) ==
        Errc::UnsupportedDims);
}

TEST_CASE("estimates are attained by their stored argmax") {
  for (SearchSet set :
       {SearchSet::Separable, SearchSet::RcBall, SearchSet::All}) {
    const SearchConfig config = small_config(set, 3, 4, 1200);
    const BoundEstimate est = maximize(Dims(2, 2), 2, config);
    const double recomputed =
        elementary_symmetric(schmidt_spectrum(est.argmax).values)[1];
    CHECK(std::abs(est.value - recomputed) < 1e-10);
    if (set == SearchSet::Separable) {
      CHECK(is_separable_2xN(est.argmax));
    }
    if (set == SearchSet::RcBall) {
      CHECK(schmidt_spectrum(est.argmax).values.sum() <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("identical configs reproduce identical estimates") {
  const SearchConfig config = small_config(SearchSet::RcBall, 11, 3, 800);
  const BoundEstimate a = maximize(Dims(2, 2), 3, config);
  const BoundEstimate b = maximize(Dims(2, 2), 3, config);
  CHECK(a.value == b.value);
  CHECK(a.bestRestartIndex == b.bestRestartIndex);
  CHECK(max_abs_diff(a.argmax.mat, b.argmax.mat) == 0.0);
}

TEST_CASE("dominance chain holds at moderate budgets") {
  for (int l : {2, 3}) {
    const BoundEstimate sep = maximize(
        Dims(2, 2), l, small_config(SearchSet::Separable, 5, 8, 3000));
    const BoundEstimate ball = maximize(
        Dims(2, 2), l, small_config(SearchSet::RcBall, 5, 8, 3000));
    CHECK(sep.value <= ball.value + 1e-9);
    CHECK(ball.value <= naive_bound(4, l) + 1e-12);
  }
}

TEST_CASE("rc-ball search reaches the known 2x2 optimum") {
  const BoundEstimate est = maximize(
      Dims(2, 2), 2, small_config(SearchSet::RcBall, 1, 8, 3000));
  CHECK(est.value > 0.332);
  CHECK(est.value <= 1.0 / 3.0 + 1e-6);
}

TEST_CASE("Werner saturation: separable search reaches the 2x2 table") {
  // Default-budget searches must reach the analytic strict values
  // (attained by Werner p = 1/3) to within 1e-4.
  SearchConfig config;
  config.set = SearchSet::Separable;
  config.seed = 2;
  const BoundTable table = builtin_strict_table_2x2();
  for (int l = 2; l <= 4; ++l) {
    const BoundEstimate est = maximize(Dims(2, 2), l, config);
    CHECK(est.value >= table.bounds[l - 1] - 1e-4);
    CHECK(est.value <= table.bounds[l - 1] + 1e-6);
  }
}

TEST_CASE("reproduce_tables keeps invariant structure") {
  SearchConfig config = small_config(SearchSet::Separable, 21, 6, 1500);
  const auto [sep, ball] = reproduce_tables(Dims(2, 2), config);
  CHECK(sep.kind == BoundKind::StrictSeparable);
  CHECK(ball.kind == BoundKind::StrictRcBall);
  CHECK(sep.bounds[0] == 1.0);
  CHECK(ball.bounds[0] == 1.0);
  CHECK(sep.provenance.origin == "numerically-estimated");
  CHECK(sep.provenance.configHash == config_hash(config));
  const BoundTable naive = naive_table(Dims(2, 2));
  for (int l = 0; l < 4; ++l) {
    CHECK(sep.bounds[l] <= ball.bounds[l] + 1e-9);
    CHECK(ball.bounds[l] <= naive.bounds[l] + 1e-12);
  }
}

TEST_CASE("profile_curve keeps the separable curve below the all curve") {
  RealVector grid(3);
  grid << 0.8, 0.9, 1.0;
  const SearchConfig config = small_config(SearchSet::All, 31, 4, 1500);
  const auto curve = profile_curve(Dims(2, 2), 2, grid, config);
  REQUIRE(curve.size() == 3);
  for (size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].m1 == grid[static_cast<int>(i)]);
    CHECK(curve[i].hasSeparable);
    CHECK(curve[i].maxSeparable <= curve[i].maxAll + 1e-9);
    CHECK(curve[i].maxAll >= 0.0);
  }
  // The maxima grow with the available trace norm.
  CHECK(curve[0].maxAll < curve[2].maxAll);
}

TEST_CASE("profile_curve at the pure-mixed extreme is near zero") {
  RealVector grid(1);
  grid << 0.5;
  const SearchConfig config = small_config(SearchSet::All, 41, 4, 2000);
  const auto curve = profile_curve(Dims(2, 2), 2, grid, config);
  CHECK(curve[0].maxAll <= 2e-3);
  CHECK(curve[0].maxSeparable <= 2e-3);
}

TEST_CASE("profile_curve omits the separable column outside 2xN") {
  RealVector grid(1);
  grid << 1.0;
  const SearchConfig config = small_config(SearchSet::All, 51, 2, 800);
  const auto curve = profile_curve(Dims(3, 3), 2, grid, config);
  CHECK_FALSE(curve[0].hasSeparable);
  CHECK(curve[0].maxAll > 0.0);
}
