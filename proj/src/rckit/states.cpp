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

#include "rckit/states.hpp"

#include <cmath>

#include "rckit/rng.hpp"

namespace rckit {

BipartiteState assemble_separable(const SeparableRecipe& recipe,
                                  const Dims& dims) {
  const int n = dims.total();
  const int k = static_cast<int>(recipe.weights.size());
  if (static_cast<int>(recipe.factorsA.size()) != k ||
      static_cast<int>(recipe.factorsB.size()) != k) {
    throw Error(Errc::DimsMismatch, "recipe weights and factors disagree");
  }
  Matrix rho = Matrix::Zero(n, n);
  for (int i = 0; i < k; ++i) {
    Vector v = Vector::Zero(n);
    for (int a = 0; a < dims.na; ++a)
      for (int b = 0; b < dims.nb; ++b)
        v[a * dims.nb + b] = recipe.factorsA[i][a] * recipe.factorsB[i][b];
    rho += recipe.weights[i] * (v * v.adjoint());
  }
  return validate_density(rho, dims);
}

int default_separable_terms(const Dims& dims) {
  return dims.total() * dims.total();
}

BipartiteState werner(double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(Errc::OutOfRange, "werner parameter must be in [0,1]");
  }
  const Dims dims(2, 2);
  Vector phi = Vector::Zero(4);
  phi[0] = 1.0 / std::sqrt(2.0);
  phi[3] = 1.0 / std::sqrt(2.0);
  Matrix rho = p * (phi * phi.adjoint()) +
               (1.0 - p) * 0.25 * Matrix::Identity(4, 4);
  return validate_density(rho, dims);
}

SymmetricPolys werner_polys(double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(Errc::OutOfRange, "werner parameter must be in [0,1]");
  }
  RealVector v(4);
  v[0] = (1.0 + 3.0 * p) / 2.0;
  v[1] = 3.0 * (p + p * p) / 4.0;
  v[2] = (3.0 * p * p + p * p * p) / 8.0;
  v[3] = p * p * p / 16.0;
  return SymmetricPolys{std::move(v)};
}

BipartiteState max_entangled(int n) {
  if (n < 2) {
    throw Error(Errc::OutOfRange, "max_entangled requires n >= 2");
  }
  const Dims dims(n, n);
  Vector phi = Vector::Zero(n * n);
  for (int a = 0; a < n; ++a) phi[a * n + a] = 1.0 / std::sqrt(double(n));
  Matrix rho = phi * phi.adjoint();
  return validate_density(rho, dims);
}

BipartiteState random_pure(const Dims& dims, uint64_t seed) {
  Rng rng(seed);
  const int n = dims.total();
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.complex_normal();
  v /= v.norm();
  return validate_density(v * v.adjoint(), dims);
}

BipartiteState random_density(const Dims& dims, uint64_t seed) {
  Rng rng(seed);
  const int n = dims.total();
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(rho, dims);
}

std::pair<BipartiteState, SeparableRecipe> random_separable(const Dims& dims,
                                                            int K,
                                                            uint64_t seed) {
  if (K <= 0) K = default_separable_terms(dims);
  Rng rng(seed);
  SeparableRecipe recipe;
  recipe.weights = RealVector(K);
  recipe.factorsA.reserve(K);
  recipe.factorsB.reserve(K);
  // Flat simplex via normalized exponentials.
  double total = 0.0;
  for (int i = 0; i < K; ++i) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    recipe.weights[i] = -std::log(u);
    total += recipe.weights[i];
  }
  recipe.weights /= total;
  for (int i = 0; i < K; ++i) {
    Vector a(dims.na), b(dims.nb);
    for (int j = 0; j < dims.na; ++j) a[j] = rng.complex_normal();
    for (int j = 0; j < dims.nb; ++j) b[j] = rng.complex_normal();
    a /= a.norm();
    b /= b.norm();
    recipe.factorsA.push_back(std::move(a));
    recipe.factorsB.push_back(std::move(b));
  }
  BipartiteState state = assemble_separable(recipe, dims);
  return {std::move(state), std::move(recipe)};
}

}  // namespace rckit
