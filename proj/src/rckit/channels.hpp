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

#ifndef RCKIT_CHANNELS_HPP
#define RCKIT_CHANNELS_HPP

#include <cstdint>

#include "rckit/criteria.hpp"
#include "rckit/linalg.hpp"

namespace rckit {

// Matrix of a linear map E from operators on C^nIn to operators on C^nOut:
// mat[(m*nOut+n),(mu*nIn+nu)] = <m| E(|mu><nu|) |n>.
struct ChannelMatrix {
  int nIn;
  int nOut;
  Matrix mat;  // nOut^2 x nIn^2
};

// Choi state rho[(i*nIn+a),(j*nIn+b)] = E[(i*nOut+j),(a*nIn+b)] / nIn with
// dims (nOut, nIn); throws NotCpt when it fails density validation.
BipartiteState choi_state(const ChannelMatrix& ch);

// E = nB * realign(rho); exact inverse of choi_state.
ChannelMatrix channel_of_state(const BipartiteState& rho);

// Complete positivity and trace preservation: the Choi state must be a valid
// density matrix with tr_A(choi) = I/nIn within 1e-9.  Throws NotCpt.
void validate_cpt(const ChannelMatrix& ch);

// Necessary conditions for entanglement breaking from the singular values of
// E: M^[l](|E|) <= C(R,l) (nIn/R)^l for l = 1..R.  Entangled outcome means
// NotEB (the channel provably preserves some entanglement); otherwise
// Inconclusive.
Verdict eb_necessary_check(const ChannelMatrix& ch);

// Exact EB test via Choi separability; Choi dims must be 2x2, 2x3 or 3x2.
bool is_eb_2xN(const ChannelMatrix& ch);

// Singular values of the channel matrix, descending, padded to
// d = min(nOut^2, nIn^2), with the derived rank.
SchmidtSpectrum channel_spectrum(const ChannelMatrix& ch);

// Random CPT channel: dual of a random density whose B marginal is projected
// to I/nIn by the twirl rho <- (I ox s^{-1/2}) rho (I ox s^{-1/2}) / nIn.
ChannelMatrix random_cpt_channel(int nOut, int nIn, uint64_t seed);

}  // namespace rckit

#endif  // RCKIT_CHANNELS_HPP
