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


#include "slocc/quad.hpp"

#include <algorithm>
#include <array>

#include "slocc/error.hpp"
#include "slocc/tri.hpp"

namespace slocc {

namespace {

constexpr std::array<std::pair<QuadTag, std::string_view>, 11> kTagNames = {{
    {QuadTag::W000_000, "W000_000"},
    {QuadTag::W000_0Psi, "W000_0Psi"},
    {QuadTag::W000_GHZ, "W000_GHZ"},
    {QuadTag::W000_W, "W000_W"},
    {QuadTag::W0kPsi_0kPsi, "W0kPsi_0kPsi"},
    {QuadTag::W0iPsi_0jPsi, "W0iPsi_0jPsi"},
    {QuadTag::W0Psi_GHZ, "W0Psi_GHZ"},
    {QuadTag::W0kPsi_W, "W0kPsi_W"},
    {QuadTag::WGHZ_W, "WGHZ_W"},
    {QuadTag::WW_W, "WW_W"},
    {QuadTag::Degenerate, "Degenerate"},
}};

QuadClass make(QuadTag tag, std::vector<int> cuts, const SpanProfile &profile, int distinguished) {
    QuadClass c;
    c.tag = tag;
    c.cuts = std::move(cuts);
    c.distinguished = distinguished;
    c.profile = profile;
    return c;
}

[[noreturn]] void contradiction(const std::string &what) {
    throw Error(ErrorCode::InternalContradiction, what);
}

std::string join_cuts(const std::vector<int> &cuts) {
    std::string s;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        s += (i ? "," : "") + std::to_string(cuts[i]);
    }
    return s;
}

// Shared by the numeric and exact screens; `rest` classifies the 3-qubit
// factor left after removing a separable qubit.
template <class Rest>
std::optional<QuadClass> screen(const std::map<Bipartition, int> &ranks, Rest rest) {
    auto cuts = all_bipartitions4();
    for (int k = 1; k <= 4; ++k) {
        if (ranks.at(cuts[static_cast<std::size_t>(k - 1)]) == 1) {
            QuadClass c;
            c.tag = QuadTag::Degenerate;
            c.description = "qubit " + std::to_string(k) + " separable; rest " + rest(k).label();
            return c;
        }
    }
    for (std::size_t i = 4; i < cuts.size(); ++i) {
        if (ranks.at(cuts[i]) == 1) {
            QuadClass c;
            c.tag = QuadTag::Degenerate;
            c.description = "pair product " + cuts[i].label();
            return c;
        }
    }
    return std::nullopt;
}

int tag_order(QuadTag t) {
    return static_cast<int>(t);
}

}  // namespace

std::string_view to_string(QuadTag tag) {
    for (const auto &[t, name] : kTagNames) {
        if (t == tag) {
            return name;
        }
    }
    return "?";
}

QuadTag parse_quad_tag(std::string_view text) {
    for (const auto &[t, name] : kTagNames) {
        if (name == text) {
            return t;
        }
    }
    throw Error(ErrorCode::ParseError, "unknown 4-qubit class '" + std::string(text) + "'");
}

std::string QuadClass::label() const {
    std::string s(to_string(tag));
    if (tag == QuadTag::Degenerate) {
        return s + "(" + description + ")";
    }
    if (!cuts.empty()) {
        s += "(" + join_cuts(cuts) + ")";
    }
    return s;
}

std::vector<int> QuadClass::absolute_cuts() const {
    std::vector<int> out;
    for (int c : cuts) {
        out.push_back(c < distinguished ? c : c + 1);
    }
    return out;
}

bool same_verdict(const QuadClass &a, const QuadClass &b) {
    return a.tag == b.tag && a.cuts == b.cuts;
}

std::optional<QuadClass> degenerate_screen(const PureState &state, double eps) {
    if (state.qubits() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "expected a 4-qubit state");
    }
    return screen(bipartition_ranks(state, eps),
                  [&](int k) { return classify3(factor_out_qubit(state, k), eps); });
}

std::optional<QuadClass> degenerate_screen(const ExactState &state) {
    if (state.qubits() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "expected a 4-qubit state");
    }
    return screen(bipartition_ranks(state), [&](int k) { return classify3(factor_out_qubit(state, k)); });
}

QuadClass decide(const SpanProfile &p, int distinguished) {
    int seps = p.count(TriClass::Kind::Sep000);
    const auto &b = p.bisep_cuts;
    const TriClass::Kind generic = p.generic_type.kind;
    if (seps >= 2) {
        return make(QuadTag::W000_000, {}, p, distinguished);
    }
    if (seps == 1) {
        if (!b.empty()) {
            return make(QuadTag::W000_0Psi, {}, p, distinguished);
        }
        if (generic == TriClass::Kind::GHZ) {
            return make(QuadTag::W000_GHZ, {}, p, distinguished);
        }
        if (generic == TriClass::Kind::W) {
            return make(QuadTag::W000_W, {}, p, distinguished);
        }
        contradiction("one product point on a line of generic type " + p.generic_type.label());
    }
    if (b.size() >= 2) {
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            if (b[i] == b[i + 1]) {
                return make(QuadTag::W0kPsi_0kPsi, {b[i]}, p, distinguished);
            }
        }
        // b is sorted and has no repeats: its two smallest cuts.
        return make(QuadTag::W0iPsi_0jPsi, {b[0], b[1]}, p, distinguished);
    }
    if (b.size() == 1) {
        if (generic == TriClass::Kind::GHZ) {
            return make(QuadTag::W0Psi_GHZ, {b[0]}, p, distinguished);
        }
        if (generic == TriClass::Kind::W) {
            return make(QuadTag::W0kPsi_W, {b[0]}, p, distinguished);
        }
        contradiction("one biseparable point on a line of generic type " + p.generic_type.label());
    }
    if (generic == TriClass::Kind::GHZ) {
        if (p.exceptional.empty()) {
            contradiction("every element of the line is GHZ");
        }
        return make(QuadTag::WGHZ_W, {}, p, distinguished);
    }
    if (generic == TriClass::Kind::W) {
        return make(QuadTag::WW_W, {}, p, distinguished);
    }
    contradiction("line of generic type " + p.generic_type.label() + " passed the screen");
}

QuadClass classify4(const PureState &state, int distinguished, double eps) {
    if (state.qubits() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "expected a 4-qubit state");
    }
    if (state.is_zero()) {
        throw Error(ErrorCode::ZeroState, "cannot classify the zero state");
    }
    if (distinguished < 1 || distinguished > 4) {
        throw Error(ErrorCode::DimensionMismatch, "distinguished qubit outside 1..4");
    }
    if (auto degenerate = degenerate_screen(state, eps)) {
        degenerate->distinguished = distinguished;
        return *degenerate;
    }
    auto d = decompose(state, distinguished);
    if (span_dimension(d, eps) != 2) {
        contradiction("span dimension 1 on a state that passed the screen");
    }
    return decide(analyze_span(d.phi0, d.phi1, eps), distinguished);
}

QuadClass classify4(const ExactState &state, int distinguished) {
    if (state.qubits() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "expected a 4-qubit state");
    }
    if (state.is_zero()) {
        throw Error(ErrorCode::ZeroState, "cannot classify the zero state");
    }
    if (distinguished < 1 || distinguished > 4) {
        throw Error(ErrorCode::DimensionMismatch, "distinguished qubit outside 1..4");
    }
    if (auto degenerate = degenerate_screen(state)) {
        degenerate->distinguished = distinguished;
        return *degenerate;
    }
    auto d = decompose(state, distinguished);
    if (span_dimension(d.phi0, d.phi1) != 2) {
        contradiction("span dimension 1 on a state that passed the screen");
    }
    return decide(analyze_span(d.phi0, d.phi1), distinguished);
}

namespace {

QuadSummary summarize_all(std::vector<QuadClass> per_qubit) {
    std::vector<std::pair<int, std::string>> keyed;
    for (const auto &v : per_qubit) {
        std::string label(to_string(v.tag));
        if (v.degenerate()) {
            label += "(" + v.description + ")";
        } else if (!v.cuts.empty()) {
            label += "(" + join_cuts(v.absolute_cuts()) + ")";
        }
        keyed.push_back({tag_order(v.tag), label});
    }
    std::sort(keyed.begin(), keyed.end());
    std::string joined;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        joined += (i ? "+" : "") + keyed[i].second;
    }
    return {std::move(per_qubit), joined};
}

}  // namespace

QuadSummary classify4_all(const PureState &state, double eps) {
    std::vector<QuadClass> v;
    for (int d = 1; d <= 4; ++d) {
        v.push_back(classify4(state, d, eps));
    }
    return summarize_all(std::move(v));
}

QuadSummary classify4_all(const ExactState &state) {
    std::vector<QuadClass> v;
    for (int d = 1; d <= 4; ++d) {
        v.push_back(classify4(state, d));
    }
    return summarize_all(std::move(v));
}

}  // namespace slocc
