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

#include <random>

#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/io.hpp"

namespace slocc {
namespace {

using io::json;

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InternalContradiction;
}

TEST(Io, StateRoundTripIsBitExact) {
    std::mt19937_64 rng(91);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 50; ++t) {
            auto s = apply_slocc(random_state(n, rng), random_slocc(n, 1e3, rng));
            EXPECT_EQ(io::parse_state(io::state_to_json(s).dump()), s);
        }
    }
}

TEST(Io, ParsesIntegerAndFloatLiterals) {
    auto s = io::parse_state(R"({"n": 1, "amps": [[1, 0], [0.5, -2e-3]]})");
    EXPECT_EQ(s[0], Complex(1.0));
    EXPECT_EQ(s[1], Complex(0.5, -2e-3));
}

TEST(Io, ShapeErrors) {
    EXPECT_EQ(code_of([] { io::parse_state("{"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::parse_state(R"({"amps": []})"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::parse_state(R"({"n": 5, "amps": []})"); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { io::parse_state(R"({"n": 1, "amps": [[1, 0]]})"); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { io::parse_state(R"({"n": 1, "amps": [[1, 0], [1]]})"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::parse_state(R"({"n": 1, "amps": [[1, 0], ["a", 0]]})"); }), ErrorCode::ParseError);
}

TEST(Io, ExactParseKeepsDecimalLiterals) {
    auto s = io::parse_exact_state(R"({"n": 1, "amps": [[0.1, 0], ["1/3", "-2/7"]]})");
    EXPECT_EQ(s[0], GaussianRational(mpq_class(1, 10)));
    EXPECT_EQ(s[1], GaussianRational(mpq_class(1, 3), mpq_class(-2, 7)));
    // 0.1 + 0.2 is exactly 0.3 over the rationals.
    auto t = io::parse_exact_state(R"({"n": 1, "amps": [[0.1, 0.2], [0.3, 0]]})");
    EXPECT_EQ(t[0].real() + t[0].imag(), t[1].real());
}

TEST(Io, VerdictFields) {
    auto v = classify4(make_canonical({"W0kPsi_W", {}, 1, 2}), 1);
    json j = io::verdict_to_json(v);
    EXPECT_EQ(j["class"], "W0kPsi_W");
    EXPECT_EQ(j["label"], "W0kPsi_W(2)");
    EXPECT_EQ(j["cuts"], json::array({2}));
    EXPECT_EQ(j["absolute_cuts"], json::array({3}));
    EXPECT_EQ(j["distinguished"], 1);
    EXPECT_EQ(j["profile"]["generic"], "W");
    EXPECT_TRUE(j["profile"]["quartic_identically_zero"].get<bool>());
    ASSERT_EQ(j["profile"]["exceptional"].size(), 1U);
    EXPECT_EQ(j["profile"]["exceptional"][0]["type"], "Bisep(2)");
}

TEST(Io, DegenerateVerdictHasDescription) {
    json j = io::verdict_to_json(classify4(PureState::basis(4, 0)));
    EXPECT_EQ(j["class"], "Degenerate");
    EXPECT_TRUE(j.contains("description"));
    EXPECT_FALSE(j.contains("profile"));
}

TEST(Io, TriVerdict) {
    json j = io::verdict_to_json(TriClass::bisep(3));
    EXPECT_EQ(j["class"], "Bisep");
    EXPECT_EQ(j["label"], "Bisep(3)");
}

TEST(Io, QuarticJson) {
    auto q = quartic(make_canonical({"GHZ", {}}), make_canonical({"W", {}}));
    json j = io::quartic_to_json(q);
    EXPECT_EQ(j["coefficients"].size(), 5U);
    EXPECT_TRUE(j.contains("scale"));
}

}  // namespace
}  // namespace slocc
