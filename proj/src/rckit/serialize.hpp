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

#ifndef RCKIT_SERIALIZE_HPP_
#define RCKIT_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "rckit/bounds.hpp"
#include "rckit/channels.hpp"
#include "rckit/criteria.hpp"
#include "rckit/linalg.hpp"

namespace rckit {

// State files: {"dims": [nA, nB], "re": 2-D row-major, "im": 2-D row-major}.
std::string state_to_json(const BipartiteState& state);
BipartiteState state_from_json(const std::string& text);

// Channel files mirror the state format with an {"nIn", "nOut"} header.
std::string channel_to_json(const ChannelMatrix& ch);
ChannelMatrix channel_from_json(const std::string& text);

// Bound tables: {"dims", "kind", "bounds", "provenance"}.
std::string bound_table_to_json(const BoundTable& table);
BoundTable bound_table_from_json(const std::string& text);

// Curve CSV with header "m1,max_separable,max_all"; the separable column is
// left empty at points where no separable search is available.
std::string curve_to_csv(const std::vector<CurvePoint>& curve);

// File helpers; failures surface as ParseError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rckit

#endif  // RCKIT_SERIALIZE_HPP_
