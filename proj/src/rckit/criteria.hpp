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

#ifndef RCKIT_CRITERIA_HPP
#define RCKIT_CRITERIA_HPP

#include <string>

#include "rckit/schmidt.hpp"

namespace rckit {

// Elementary symmetric polynomials of the Schmidt coefficients:
// values[l-1] = M^[l] = e_l(lambda_1 .. lambda_d), length d.
struct SymmetricPolys {
  RealVector values;
};

enum class BoundKind { Naive, RankRestricted, StrictSeparable, StrictRcBall };

struct Provenance {
  std::string origin;      // "analytic" or "numerically-estimated"
  std::string configHash;  // search config hash when numerically estimated
};

// Per-degree upper bounds on M^[l]; bounds[0] is always 1 (the trace-norm
// criterion itself).
struct BoundTable {
  Dims dims;
  BoundKind kind;
  RealVector bounds;  // length d
  Provenance provenance;
};

enum class Outcome { Entangled, Inconclusive };

// Two-valued by design: every criterion here is only a necessary condition
// for separability, so the non-firing outcome is Inconclusive, never
// "separable".  On Entangled, (l, value, bound) is the firing criterion; on
// Inconclusive they report the smallest-margin check that was run.
struct Verdict {
  Outcome outcome;
  int l;
  double value;
  double bound;
};

const char* bound_kind_name(BoundKind kind) noexcept;
BoundKind bound_kind_from_name(const std::string& name);

// Stable product recurrence over Prod_k (1 + lambda_k t); O(d^2).
SymmetricPolys symmetric_polys(const SchmidtSpectrum& s);
RealVector elementary_symmetric(const RealVector& lambda);

// y_l(d) = C(d,l) / d^l.
double naive_bound(int d, int l);
// C(R,l) / R^l for l <= R, 0 for l > R.
double rank_bound(int R, int l);

BoundTable naive_table(const Dims& dims);
// Analytic strict-separable table for (2,2): {1, 1/3, 5/108, 1/432}.
BoundTable builtin_strict_table_2x2();

// Trace-norm criterion: Entangled iff M^[1] > 1 (+ margin).
Verdict rc_check(const BipartiteState& rho);
// Entangled if M^[l] exceeds table.bounds[l-1] for any l; reports the
// smallest violating l.
Verdict rcl_check(const BipartiteState& rho, const BoundTable& table);

// M^[1..d] extracted from the characteristic polynomial of |rho^R| via the
// Faddeev-LeVerrier recurrence; requires nA = nB.
RealVector charpoly_coeffs(const BipartiteState& rho);
// Same extraction for an arbitrary Hermitian PSD matrix (cross-check oracle).
RealVector charpoly_sym_polys(const Matrix& hermitian_psd);

}  // namespace rckit

#endif  // RCKIT_CRITERIA_HPP
