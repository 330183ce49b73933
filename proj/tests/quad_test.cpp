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


#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/quad.hpp"

namespace slocc {
namespace {

// Qubit j + 1 of `s` (j = 1..3) moves to qubit perm[j - 1] + 1.
PureState permute_last_three(const PureState &s, const std::array<int, 3> &perm) {
    std::vector<Complex> out(16);
    for (std::size_t i = 0; i < 16; ++i) {
        std::size_t j = i & 8U;
        for (int q = 1; q <= 3; ++q) {
            std::size_t bit = (i >> (3 - q)) & 1U;
            j |= bit << (3 - perm[static_cast<std::size_t>(q - 1)]);
        }
        out[j] = s[i];
    }
    return PureState(4, out);
}

TEST(Classify4, Examples) {
    auto v = classify4(make_canonical({"W0kPsi_W", {{"lambda", 0.0}}}), 1);
    EXPECT_EQ(v.tag, QuadTag::W0kPsi_W);
    EXPECT_EQ(v.cuts, std::vector<int>{1});
    EXPECT_EQ(v.label(), "W0kPsi_W(1)");
    EXPECT_EQ(classify4(make_canonical({"WW_W", {{"a3", 1.0}, {"a5", 1.0}, {"mu", 0.0}}, 1})).tag, QuadTag::WW_W);
    EXPECT_EQ(classify4(make_canonical({"W000_000", {}})).tag, QuadTag::W000_000);
}

TEST(Classify4, EveryFixture) {
    for (const auto &f : quad_fixtures()) {
        auto v = classify4(f.state, 1);
        EXPECT_EQ(v.tag, f.tag) << f.name;
        EXPECT_EQ(v.cuts, f.cuts) << f.name;
        EXPECT_TRUE(v.profile.has_value());
    }
}

TEST(Classify4, AbsoluteCutsSkipDistinguishedQubit) {
    auto v = classify4(make_canonical({"W0kPsi_W", {}}), 1);
    EXPECT_EQ(v.absolute_cuts(), std::vector<int>{2});
}

TEST(Classify4, ZeroAndWrongSize) {
    try {
        (void)classify4(PureState(4, std::vector<Complex>(16)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroState);
    }
    try {
        (void)classify4(make_canonical({"GHZ", {}}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(Classify4, DegenerateStatesScreenedOut) {
    auto bell = PureState(2, {1.0, 0.0, 0.0, 1.0});
    std::vector<PureState> states = {PureState::basis(4, 0), tensor(bell, bell),
                                     tensor(PureState::basis(1, 0), make_canonical({"W", {}})),
                                     tensor(make_canonical({"GHZ", {}}), PureState::basis(1, 1))};
    for (const auto &s : states) {
        auto v = classify4(s);
        EXPECT_TRUE(v.degenerate());
        EXPECT_FALSE(v.profile.has_value());
        EXPECT_FALSE(v.description.empty());
        auto all = classify4_all(s);
        for (const auto &p : all.per_qubit) {
            EXPECT_TRUE(p.degenerate());
        }
    }
}

TEST(Classify4All, GhzFourIsSymmetric) {
    auto all = classify4_all(make_canonical({"W000_000", {}}));
    ASSERT_EQ(all.per_qubit.size(), 4U);
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(all.per_qubit[static_cast<std::size_t>(k)].tag, QuadTag::W000_000);
        EXPECT_EQ(all.per_qubit[static_cast<std::size_t>(k)].distinguished, k + 1);
    }
    EXPECT_FALSE(all.canonical_label.empty());
}

TEST(Classify4All, LambdaFamilyFirstQubit) {
    auto all = classify4_all(make_canonical({"W0kPsi_W", {}}));
    EXPECT_EQ(all.per_qubit[0].label(), "W0kPsi_W(1)");
}

TEST(Classify4, SloccInvariance) {
    std::mt19937_64 rng(51);
    for (const auto &f : quad_fixtures()) {
        int bad = 0;
        for (int t = 0; t < 500; ++t) {
            auto v = classify4(apply_slocc(f.state, random_slocc(4, 1e3, rng)), 1);
            bad += v.tag == f.tag && v.cuts == f.cuts ? 0 : 1;
        }
        EXPECT_EQ(bad, 0) << f.name;
    }
}

// Decomposing on qubits 2..4 turns several fixtures into GHZ lines with a
// fourfold Sep000 root, whose numeric roots split widely.
TEST(Classify4, SloccInvarianceOnEveryDistinguishedQubit) {
    std::mt19937_64 rng(11);
    for (const auto &f : quad_fixtures()) {
        for (int k = 2; k <= 4; ++k) {
            auto base = classify4(f.state, k);
            int bad = 0;
            for (int t = 0; t < 300; ++t) {
                bad += same_verdict(classify4(apply_slocc(f.state, random_slocc(4, 1e3, rng)), k), base) ? 0 : 1;
            }
            EXPECT_EQ(bad, 0) << f.name << " k=" << k;
        }
    }
}

TEST(Classify4, ScaleInvariance) {
    std::mt19937_64 rng(52);
    for (const auto &f : quad_fixtures()) {
        for (int t = 0; t < 20; ++t) {
            auto s = apply_slocc(f.state, random_slocc(4, 1e3, rng));
            auto base = classify4(s);
            for (double k : {1e-6, 1e6}) {
                EXPECT_TRUE(same_verdict(classify4(s.scaled(k)), base)) << f.name;
            }
        }
    }
}

TEST(Classify4, ExactAgreesWithNumericOnFixtures) {
    for (const auto &f : quad_fixtures()) {
        auto n = classify4(f.state, 1);
        auto e = classify4(ExactState::from_numeric(f.state), 1);
        EXPECT_TRUE(same_verdict(n, e)) << f.name << ": " << n.label() << " vs " << e.label();
    }
}

TEST(Classify4, PermutationCovarianceOverLastThreeQubits) {
    std::vector<std::array<int, 3>> perms = {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}, {2, 3, 1}, {3, 1, 2}};
    for (const auto &f : quad_fixtures()) {
        auto base = classify4(f.state, 1);
        ASSERT_TRUE(base.profile.has_value()) << f.name;
        for (const auto &perm : perms) {
            auto v = classify4(permute_last_three(f.state, perm), 1);
            EXPECT_EQ(v.tag, f.tag) << f.name;
            ASSERT_TRUE(v.profile.has_value()) << f.name;
            // The full set of Bisep cuts is covariant. The verdict keeps the
            // two smallest when there are three (SepLine), so only compare it
            // when nothing was dropped.
            std::vector<int> want;
            for (int c : base.profile->bisep_cuts) {
                want.push_back(perm[static_cast<std::size_t>(c - 1)]);
            }
            std::sort(want.begin(), want.end());
            EXPECT_EQ(v.profile->bisep_cuts, want) << f.name;
            if (f.cuts.size() == base.profile->bisep_cuts.size()) {
                std::vector<int> cuts;
                for (int c : f.cuts) {
                    cuts.push_back(perm[static_cast<std::size_t>(c - 1)]);
                }
                std::sort(cuts.begin(), cuts.end());
                EXPECT_EQ(v.cuts, cuts) << f.name;
            }
        }
    }
}

TEST(Classify4, Sep000PointForcesW000Tag) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 2000; ++t) {
        auto f = quad_fixtures()[static_cast<std::size_t>(t) % quad_fixtures().size()];
        auto v = classify4(apply_slocc(f.state, random_slocc(4, 10, rng)));
        if (v.profile && v.profile->contains_000) {
            EXPECT_EQ(std::string(to_string(v.tag)).substr(0, 5), "W000_");
        }
    }
}

TEST(Classify4, RandomStatesAreGenericAndNeverContradict) {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 2000; ++t) {
        auto v = classify4(random_state(4, rng));
        EXPECT_EQ(v.tag, QuadTag::WGHZ_W);
    }
}

TEST(Decide, AllGhzProfileIsAContradiction) {
    SpanProfile p;
    p.generic_type = TriClass::ghz();
    p.ghz_generic = true;
    try {
        (void)decide(p, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InternalContradiction);
    }
}

TEST(QuadTag, NamesRoundTrip) {
    for (int i = 0; i <= static_cast<int>(QuadTag::Degenerate); ++i) {
        auto tag = static_cast<QuadTag>(i);
        EXPECT_EQ(parse_quad_tag(to_string(tag)), tag);
    }
    EXPECT_THROW(parse_quad_tag("WGHZ_GHZ"), Error);
}

}  // namespace
}  // namespace slocc
