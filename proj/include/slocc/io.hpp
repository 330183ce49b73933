// Copyright 2026 The slocc4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of states and verdicts.
//
// State:   {"n": 3, "amps": [[re, im], ...]}
// Verdict: {"class": "W0kPsi_W", "label": "W0kPsi_W(1)", "distinguished": 1,
//           "cuts": [1], "absolute_cuts": [2], "profile": {...}}

#pragma once

#include <json.hpp>
#include <string_view>

#include "slocc/exact.hpp"
#include "slocc/pencil.hpp"
#include "slocc/qstate.hpp"
#include "slocc/quad.hpp"
#include "slocc/tri.hpp"

namespace slocc::io {

using nlohmann::json;

/// Throws ParseError on malformed text or shape, DimensionMismatch when n is
/// outside 1..4 or "amps" does not hold 2^n entries.
PureState parse_state(std::string_view text);

/// Reads every amplitude as the exact rational its literal denotes
/// ("0.1" is 1/10). Strings "p/q" are also accepted.
ExactState parse_exact_state(std::string_view text);

json state_to_json(const PureState &state);
json point_to_json(const ProjectivePoint &p);
json profile_to_json(const SpanProfile &profile);
json quartic_to_json(const QuarticForm &q);

/// "cuts" are positions inside the 3-qubit pencil, "absolute_cuts" the
/// corresponding qubits of the 4-qubit state.
json verdict_to_json(const QuadClass &verdict);
json verdict_to_json(const TriClass &verdict);

}  // namespace slocc::io
