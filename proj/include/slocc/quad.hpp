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

// Four-qubit inductive superclasses. A state |0>|phi0> + |1>|phi1> (split on
// the distinguished qubit) is labelled by the lowest 3-qubit types found on
// the line spanned by phi0 and phi1, in the order 000 < 0Psi < GHZ, W.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "slocc/exact.hpp"
#include "slocc/pencil.hpp"
#include "slocc/qstate.hpp"

namespace slocc {

enum class QuadTag {
    W000_000,
    W000_0Psi,
    W000_GHZ,
    W000_W,
    W0kPsi_0kPsi,
    W0iPsi_0jPsi,
    W0Psi_GHZ,
    W0kPsi_W,
    WGHZ_W,
    WW_W,
    Degenerate,
};

std::string_view to_string(QuadTag tag);
/// Throws ParseError.
QuadTag parse_quad_tag(std::string_view text);

struct QuadClass {
    QuadTag tag = QuadTag::Degenerate;
    /// Cut indices are 3-qubit positions (1..3) inside phi0/phi1: one for
    /// W0kPsi_0kPsi, W0Psi_GHZ, W0kPsi_W; two (ascending) for W0iPsi_0jPsi.
    std::vector<int> cuts;
    int distinguished = 1;
    /// Set for Degenerate only.
    std::string description;
    /// Pencil analysis behind the verdict; absent for Degenerate.
    std::optional<SpanProfile> profile;

    bool degenerate() const {
        return tag == QuadTag::Degenerate;
    }
    /// "W0kPsi_W(1)", "Degenerate(pair product)", ...
    std::string label() const;
    /// Cut indices translated to absolute qubit numbers (skipping the
    /// distinguished qubit).
    std::vector<int> absolute_cuts() const;
};

/// Verdict on the tag and cuts only.
bool same_verdict(const QuadClass &a, const QuadClass &b);

/// Throws ZeroState, DimensionMismatch, InternalContradiction.
QuadClass classify4(const PureState &state, int distinguished = 1, double eps = kDefaultEps);
QuadClass classify4(const ExactState &state, int distinguished = 1);

/// The screen of reduced ranks alone; nullopt when the state is genuinely
/// 4-partite.
std::optional<QuadClass> degenerate_screen(const PureState &state, double eps = kDefaultEps);
std::optional<QuadClass> degenerate_screen(const ExactState &state);

/// Decision table applied to a finished profile.
QuadClass decide(const SpanProfile &profile, int distinguished);

struct QuadSummary {
    std::vector<QuadClass> per_qubit;
    /// Verdicts sorted by tag order with absolute cut numbers, joined by "+".
    std::string canonical_label;
};

QuadSummary classify4_all(const PureState &state, double eps = kDefaultEps);
QuadSummary classify4_all(const ExactState &state);

}  // namespace slocc
