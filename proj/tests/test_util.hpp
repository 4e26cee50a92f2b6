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

#ifndef RCKIT_TESTS_TEST_UTIL_HPP_
#define RCKIT_TESTS_TEST_UTIL_HPP_

#include <optional>
#include <utility>

#include "rckit/types.hpp"

namespace rckit_test {

// Runs f and reports the error code it threw, if any.
template <typename F>
std::optional<rckit::Errc> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const rckit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline double max_abs_diff(const rckit::Matrix& a, const rckit::Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const rckit::RealVector& a,
                           const rckit::RealVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace rckit_test

#endif  // RCKIT_TESTS_TEST_UTIL_HPP_
