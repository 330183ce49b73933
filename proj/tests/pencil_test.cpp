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

#include "reference.hpp"
#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/oracle.hpp"
#include "slocc/pencil.hpp"

namespace slocc {
namespace {

PureState ket3(std::initializer_list<std::pair<std::size_t, Complex>> terms) {
    std::vector<Complex> a(8);
    for (const auto &[i, v] : terms) {
        a[i] = v;
    }
    return PureState(3, a);
}

const PureState kZero3 = ket3({{0, 1.0}});
const PureState kOnes3 = ket3({{7, 1.0}});
const PureState kW = ket3({{1, 1.0}, {2, 1.0}, {4, 1.0}});
const PureState kGhz = ket3({{0, 1.0}, {7, 1.0}});
// |101> + |110>
const PureState kOnePsi = ket3({{5, 1.0}, {6, 1.0}});
// a3 = a5 = 1, a6 = 4
const PureState kWwGenerator = ket3({{3, 1.0}, {5, 1.0}, {6, 4.0}});

std::vector<std::string> types(const SpanProfile &p) {
    std::vector<std::string> v;
    for (const auto &e : p.exceptional) {
        v.push_back(e.type.label());
    }
    std::sort(v.begin(), v.end());
    return v;
}

void expect_coefficients(const QuarticForm &q, std::array<Complex, 5> want, double tol = 1e-14) {
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_LE(std::abs(WideComplex(want[k]) - q.c[k]), tol) << "k=" << k;
    }
}

TEST(Quartic, ProductEndpoints) {
    auto q = quartic(kZero3, kOnes3);
    expect_coefficients(q, {0.0, 0.0, 1.0, 0.0, 0.0});
    EXPECT_FALSE(q.is_identically_zero());
}

TEST(Quartic, LambdaZeroPencilVanishes) {
    auto q = quartic(kOnePsi, kW);
    EXPECT_TRUE(q.is_identically_zero());
    expect_coefficients(q, {0.0, 0.0, 0.0, 0.0, 0.0});
}

TEST(Quartic, GhzSecondVectorGivesUnitY4) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 500; ++t) {
        auto q = quartic(random_state(3, rng), kGhz);
        EXPECT_LE(std::abs(q.c[4] - WideComplex(1)), 1e-12);
    }
}

TEST(Quartic, CoefficientsMatchVandermondeReference) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        auto p0 = random_state(3, rng), p1 = random_state(3, rng);
        auto want = reference::quartic_coefficients(p0, p1);
        auto q = quartic(p0, p1);
        double scale = std::pow(std::max(p0.max_abs(), p1.max_abs()), 4);
        for (std::size_t k = 0; k < 5; ++k) {
            Complex got(static_cast<double>(q.c[k].real()), static_cast<double>(q.c[k].imag()));
            EXPECT_LE(std::abs(want[k] - got), 1e-11 * scale);
        }
    }
}

TEST(Quartic, EvaluationIdentity) {
    std::mt19937_64 rng(43);
    std::normal_distribution<double> g;
    for (int t = 0; t < 1000; ++t) {
        auto p0 = random_state(3, rng), p1 = random_state(3, rng);
        auto q = quartic(p0, p1);
        for (int j = 0; j < 20; ++j) {
            Complex x(g(rng), g(rng)), y(g(rng), g(rng));
            double scale = std::max(p0.max_abs(), p1.max_abs()) * std::max(std::abs(x), std::abs(y));
            Complex want = reference::hyperdeterminant(reference::line_element(p0, p1, x, y));
            EXPECT_LE(std::abs(q.evaluate(x, y) - want), 1e-10 * std::pow(scale, 4));
        }
    }
}

TEST(Quartic, ZeroInputThrows) {
    EXPECT_THROW(quartic(PureState(3, std::vector<Complex>(8)), kW), Error);
}

TEST(QuarticRoots, Monomials) {
    QuarticForm q;
    q.c = {0, 0, 1, 0, 0};
    auto r = quartic_roots(q);
    ASSERT_EQ(r.size(), 2U);
    for (const auto &p : r) {
        EXPECT_EQ(p.multiplicity, 2);
        EXPECT_TRUE(p == ProjectivePoint::make(1, 0) || p == ProjectivePoint::make(0, 1));
    }
    q.c = {0, 0, 0, 0, 1};
    r = quartic_roots(q);
    ASSERT_EQ(r.size(), 1U);
    EXPECT_EQ(r[0].multiplicity, 4);
    EXPECT_EQ(r[0], ProjectivePoint::infinity());
}

TEST(QuarticRoots, FourthRootsOfUnity) {
    QuarticForm q;
    q.c = {1, 0, 0, 0, -1};
    auto r = quartic_roots(q);
    ASSERT_EQ(r.size(), 4U);
    for (Complex y : {Complex(1), Complex(-1), Complex(0, 1), Complex(0, -1)}) {
        auto want = ProjectivePoint::make(1.0, y);
        EXPECT_TRUE(std::any_of(r.begin(), r.end(), [&](const ProjectivePoint &p) {
            return chordal_distance(p, want) < 1e-12 && p.multiplicity == 1;
        }));
    }
}

TEST(QuarticRoots, IdenticallyZeroThrows) {
    QuarticForm q;
    try {
        (void)quartic_roots(q);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IdenticallyZero);
    }
}

TEST(ClauseQuadratics, LambdaZeroPencil) {
    auto c = clause_quadratics(kOnePsi, kW);
    // Clause 2: (y^2, 0).
    EXPECT_LE(std::abs(c[1][0].c[2] - WideComplex(1)), 1e-14);
    EXPECT_LE(std::abs(c[1][0].c[0]) + std::abs(c[1][0].c[1]), 1e-14);
    EXPECT_TRUE(c[1][1].is_identically_zero());
}

TEST(ClauseQuadratics, WwGenerator) {
    auto c = clause_quadratics(kWwGenerator, kW);
    // (-y^2, 4x^2), (y^2, 4x^2), (x^2, y^2)
    std::array<std::array<std::array<double, 3>, 2>, 3> want = {{
        {{{0, 0, -1}, {4, 0, 0}}}, {{{0, 0, 1}, {4, 0, 0}}}, {{{1, 0, 0}, {0, 0, 1}}}}};
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t f = 0; f < 2; ++f) {
            for (std::size_t j = 0; j < 3; ++j) {
                EXPECT_LE(std::abs(c[k][f].c[j] - WideComplex(want[k][f][j])), 1e-13) << k << f << j;
            }
        }
    }
}

TEST(ClauseQuadratics, ProductEndpointsAllVanish) {
    for (const auto &pair : clause_quadratics(kZero3, kOnes3)) {
        EXPECT_TRUE(pair[0].is_identically_zero());
        EXPECT_TRUE(pair[1].is_identically_zero());
    }
}

TEST(AnalyzeSpan, ProductEndpoints) {
    auto p = analyze_span(kZero3, kOnes3);
    EXPECT_EQ(p.generic_type, TriClass::ghz());
    EXPECT_FALSE(p.quartic_identically_zero);
    ASSERT_EQ(p.exceptional.size(), 2U);
    for (const auto &e : p.exceptional) {
        EXPECT_EQ(e.type, TriClass::sep000());
        EXPECT_TRUE(e.point == ProjectivePoint::make(1, 0) || e.point == ProjectivePoint::make(0, 1));
    }
    EXPECT_TRUE(p.contains_000);
}

TEST(AnalyzeSpan, LambdaZeroPencil) {
    auto p = analyze_span(kOnePsi, kW);
    EXPECT_TRUE(p.quartic_identically_zero);
    EXPECT_EQ(p.generic_type, TriClass::w());
    ASSERT_EQ(p.exceptional.size(), 1U);
    EXPECT_EQ(p.exceptional[0].type, TriClass::bisep(1));
    EXPECT_EQ(p.exceptional[0].point, ProjectivePoint::infinity());
}

TEST(AnalyzeSpan, WwGeneratorHasNoExceptionalPoints) {
    auto p = analyze_span(kWwGenerator, kW);
    EXPECT_TRUE(p.quartic_identically_zero);
    EXPECT_EQ(p.generic_type, TriClass::w());
    EXPECT_TRUE(p.exceptional.empty());
}

TEST(AnalyzeSpan, CollinearInputsThrow) {
    try {
        (void)analyze_span(kW, kW.scaled(2.0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateSpan);
    }
}

TEST(AnalyzeSpan, GhzSpanNeverAllGhz) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 2000; ++t) {
        auto phi0 = t % 2 ? random_state(3, rng) : apply_slocc(kGhz, random_slocc(3, 1e3, rng));
        auto p = analyze_span(phi0, kGhz);
        EXPECT_FALSE(p.generic_type == TriClass::ghz() && p.exceptional.empty());
    }
}

TEST(AnalyzeSpan, TwoGhzImagesAlwaysContainNonGhz) {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 2000; ++t) {
        auto a = apply_slocc(kGhz, random_slocc(3, 1e3, rng));
        auto b = apply_slocc(kGhz, random_slocc(3, 1e3, rng));
        auto p = analyze_span(a.scaled(1 / a.norm()), b.scaled(1 / b.norm()));
        EXPECT_FALSE(p.exceptional.empty());
    }
}

TEST(AnalyzeSpan, Gl2Covariance) {
    std::mt19937_64 rng(46);
    for (const auto &f : quad_fixtures()) {
        auto d = decompose(f.state, 1);
        auto base = analyze_span(d.phi0, d.phi1);
        for (int t = 0; t < 100; ++t) {
            auto m = random_local_operator(1e3, rng);
            auto a = m(0, 0) * d.phi0 + m(0, 1) * d.phi1;
            auto b = m(1, 0) * d.phi0 + m(1, 1) * d.phi1;
            auto p = analyze_span(a, b);
            EXPECT_EQ(p.generic_type, base.generic_type) << f.name;
            EXPECT_EQ(types(p), types(base)) << f.name;
        }
    }
}

TEST(AnalyzeSpan, ExceptionalPointsAreMoebiusImages) {
    // Recombining with M moves (x:y) to (x:y) M^-1 in row-vector form.
    auto d = decompose(make_canonical({"WGHZ_W", {}}), 1);
    auto base = analyze_span(d.phi0, d.phi1);
    LocalOperator m(2.0, Complex(0, 1), -1.0, 3.0);
    auto p = analyze_span(m(0, 0) * d.phi0 + m(0, 1) * d.phi1, m(1, 0) * d.phi0 + m(1, 1) * d.phi1);
    auto inv = m.inverse();
    for (const auto &e : base.exceptional) {
        auto moved = ProjectivePoint::make(e.point.x * inv(0, 0) + e.point.y * inv(1, 0),
                                           e.point.x * inv(0, 1) + e.point.y * inv(1, 1));
        EXPECT_TRUE(std::any_of(p.exceptional.begin(), p.exceptional.end(), [&](const ExceptionalPoint &q) {
            return chordal_distance(q.point, moved) < 1e-8 && q.type == e.type;
        }));
    }
}

TEST(AnalyzeSpan, SeparablePointsOfSepLine) {
    Complex p0 = 1.5, psi01(0.5, 1.0), psi10 = -2.0;
    auto s = make_canonical({"SepLine", {{"p0", p0}, {"psi00", 1.0}, {"psi01", psi01}, {"psi10", psi10}}});
    auto d = decompose(s, 1);
    auto p = analyze_span(d.phi0, d.phi1);
    for (Complex x : {-1.0 / (p0 * psi01), -1.0 / (p0 * psi10)}) {
        auto want = ProjectivePoint::make(x, 1.0);
        EXPECT_TRUE(std::any_of(p.exceptional.begin(), p.exceptional.end(), [&](const ExceptionalPoint &e) {
            return e.type.separable() && chordal_distance(e.point, want) <= 1e-6;
        })) << x;
    }
}

TEST(AnalyzeSpan, DenseSamplingMatchesProfile) {
    auto pts = oracle::sphere_points(2000);
    for (const auto &f : quad_fixtures()) {
        auto d = decompose(f.state, 1);
        auto p = analyze_span(d.phi0, d.phi1);
        auto verdicts = sample_line(d.phi0, d.phi1, pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double near = 1.0;
            for (const auto &e : p.exceptional) {
                near = std::min(near, chordal_distance(e.point, pts[i]));
            }
            if (near > 1e-4) {
                EXPECT_EQ(verdicts[i], p.generic_type) << f.name;
            }
        }
    }
}

TEST(AnalyzeSpan, ExactMatchesNumericOnFixtures) {
    for (const auto &f : quad_fixtures()) {
        auto d = decompose(f.state, 1);
        auto p = analyze_span(d.phi0, d.phi1);
        auto e = decompose(ExactState::from_numeric(f.state), 1);
        auto q = analyze_span(e.phi0, e.phi1);
        EXPECT_TRUE(q.exact);
        EXPECT_EQ(q.generic_type, p.generic_type) << f.name;
        EXPECT_EQ(types(q), types(p)) << f.name;
    }
}

TEST(ExactQuartic, GhzSecondVectorGivesExactlyOne) {
    std::mt19937_64 rng(47);
    auto g = ExactState::from_numeric(kGhz);
    for (int t = 0; t < 50; ++t) {
        auto q = exact_quartic(ExactState::from_numeric(random_state(3, rng)), g);
        EXPECT_EQ(q.c.back(), GaussianRational(1));
    }
}

TEST(ProjectivePoint, NormalizedRepresentative) {
    auto a = ProjectivePoint::make(Complex(0, 2), Complex(1, 1));
    auto b = ProjectivePoint::make(Complex(0, -6), Complex(-3, -3));
    EXPECT_EQ(a, b);
    EXPECT_NEAR(std::norm(a.x) + std::norm(a.y), 1.0, 1e-15);
    EXPECT_THROW(ProjectivePoint::make(0.0, 0.0), Error);
}

}  // namespace
}  // namespace slocc
