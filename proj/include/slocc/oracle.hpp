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

// Brute-force cross-checks for tests. Nothing here calls into the
// polynomial code of tri.hpp or pencil.hpp.

#pragma once

#include <vector>

#include "slocc/pencil.hpp"
#include "slocc/qstate.hpp"
#include "slocc/tri.hpp"

namespace slocc::oracle {

/// Single-qubit reduced ranks give Sep000 / Bisep(k) / genuine. Genuine
/// states are GHZ iff the two roots of det(x M0 + y M1) are distinct, with
/// M0, M1 the 2x2 slices at qubit 1 = 0, 1 (W has a double root).
TriClass classify3_by_ranks(const PureState &state, double eps = kDefaultEps);

/// Classifies `samples` quasi-uniform points of the line with
/// classify3_by_ranks, then locates each non-generic element by local
/// minimisation of a rank-deficiency measure near the best samples.
/// Point coordinates are approximate (about 1e-8 chordally).
SpanProfile profile_by_sampling(const PureState &phi0, const PureState &phi1, int samples = 2000,
                                double eps = kDefaultEps);

/// Fibonacci points on the Riemann sphere mapped to (x:y).
std::vector<ProjectivePoint> sphere_points(int count);

}  // namespace slocc::oracle
