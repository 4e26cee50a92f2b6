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

#include "rckit/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace rckit {

NmResult nelder_mead_min(const std::function<double(const RealVector&)>& f,
                         const RealVector& x0, const NmOptions& opts) {
  const int n = static_cast<int>(x0.size());
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / n;
  const double gamma = 0.75 - 0.5 / n;
  const double delta = 1.0 - 1.0 / n;

  std::vector<RealVector> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (int i = 1; i <= n; ++i) {
    double& c = pts[i][i - 1];
    c = (c != 0.0) ? 1.05 * c : 0.00025;
  }
  for (int i = 0; i <= n; ++i) fv[i] = f(pts[i]);

  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  auto sort_simplex = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fv[a] < fv[b]; });
  };
  sort_simplex();

  int iter = 0;
  for (; iter < opts.maxIters; ++iter) {
    const int best = order[0], worst = order[n], second = order[n - 1];

    double fspread = fv[worst] - fv[best];
    double xspread = 0.0;
    for (int i = 1; i <= n; ++i) {
      xspread = std::max(
          xspread, (pts[order[i]] - pts[best]).cwiseAbs().maxCoeff());
    }
    if (fspread <= opts.fTol && xspread <= opts.xTol) break;

    RealVector centroid = RealVector::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != worst) centroid += pts[i];
    }
    centroid /= n;

    RealVector xr = centroid + alpha * (centroid - pts[worst]);
    const double fr = f(xr);
    if (fr < fv[best]) {
      RealVector xe = centroid + beta * (xr - centroid);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      pts[worst] = std::move(xr);
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      RealVector xc =
          outside ? RealVector(centroid + gamma * (xr - centroid))
                  : RealVector(centroid - gamma * (centroid - pts[worst]));
      const double fc = f(xc);
      if (fc < (outside ? fr : fv[worst])) {
        pts[worst] = std::move(xc);
        fv[worst] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          const int idx = order[i];
          pts[idx] = pts[best] + delta * (pts[idx] - pts[best]);
          fv[idx] = f(pts[idx]);
        }
      }
    }
    sort_simplex();
  }

  return NmResult{pts[order[0]], fv[order[0]], iter};
}

}  // namespace rckit
