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
#include "slocc/kernels.hpp"
#include "slocc/tri.hpp"

namespace slocc {
namespace {

using kernels::SweepRow;

std::vector<Complex> random_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(n);
    for (auto &x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

TEST(Kernels, IsaNames) {
    EXPECT_EQ(kernels::to_string(kernels::Isa::Scalar), "scalar");
    EXPECT_EQ(kernels::to_string(kernels::Isa::Avx2), "avx2");
    if (!kernels::avx2::available()) {
        EXPECT_EQ(kernels::active_isa(), kernels::Isa::Scalar);
    }
}

TEST(Kernels, ScalarSingleQubitMatchesDefinition) {
    std::mt19937_64 rng(81);
    auto v = random_vector(16, rng);
    auto m4 = random_vector(4, rng);
    std::array<Complex, 4> m = {m4[0], m4[1], m4[2], m4[3]};
    for (unsigned bit = 0; bit < 4; ++bit) {
        auto got = v;
        kernels::scalar::apply_single_qubit(got, bit, m);
        for (std::size_t i = 0; i < 16; ++i) {
            std::size_t b = (i >> bit) & 1U;
            std::size_t i0 = i & ~(std::size_t{1} << bit);
            std::size_t i1 = i0 | (std::size_t{1} << bit);
            Complex want = m[2 * b] * v[i0] + m[2 * b + 1] * v[i1];
            EXPECT_LE(std::abs(got[i] - want), 1e-14);
        }
    }
}

TEST(Kernels, Avx2SingleQubitMatchesScalar) {
    if (!kernels::avx2::available()) {
        GTEST_SKIP() << "AVX2 not available";
    }
    std::mt19937_64 rng(82);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 200; ++t) {
            auto v = random_vector(std::size_t{1} << n, rng);
            auto m4 = random_vector(4, rng);
            std::array<Complex, 4> m = {m4[0], m4[1], m4[2], m4[3]};
            for (unsigned bit = 0; bit < static_cast<unsigned>(n); ++bit) {
                auto a = v, b = v;
                kernels::scalar::apply_single_qubit(a, bit, m);
                kernels::avx2::apply_single_qubit(b, bit, m);
                EXPECT_LE(max_diff(a, b), 1e-13);
            }
        }
    }
}

void sweep_both(std::mt19937_64 &rng, std::size_t count, std::vector<SweepRow> &a, std::vector<SweepRow> &b,
                const PureState &phi0, const PureState &phi1) {
    auto xs = random_vector(count, rng), ys = random_vector(count, rng);
    a.assign(count, {});
    b.assign(count, {});
    std::span<const Complex, 8> p0(phi0.amplitudes().data(), 8), p1(phi1.amplitudes().data(), 8);
    kernels::scalar::pencil_sweep(p0, p1, xs, ys, a);
    kernels::avx2::pencil_sweep(p0, p1, xs, ys, b);
}

void expect_rows_close(const SweepRow &a, const SweepRow &b) {
    EXPECT_LE(std::abs(a.inv - b.inv), 1e-12 * std::max(1.0, std::abs(a.inv)));
    EXPECT_LE(std::abs(a.ghz_ratio - b.ghz_ratio), 1e-10 * std::max(1e-6, a.ghz_ratio));
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_LE(std::abs(a.clause_ratio[k] - b.clause_ratio[k]), 1e-10 * std::max(1e-6, a.clause_ratio[k]));
    }
}

TEST(Kernels, Avx2SweepMatchesScalar) {
    if (!kernels::avx2::available()) {
        GTEST_SKIP() << "AVX2 not available";
    }
    std::mt19937_64 rng(83);
    std::vector<SweepRow> a, b;
    for (int t = 0; t < 100; ++t) {
        // Odd counts exercise the tail loop.
        sweep_both(rng, 37 + static_cast<std::size_t>(t), a, b, random_state(3, rng), random_state(3, rng));
        for (std::size_t i = 0; i < a.size(); ++i) {
            expect_rows_close(a[i], b[i]);
        }
    }
    for (const auto &f : quad_fixtures()) {
        auto d = decompose(f.state, 1);
        sweep_both(rng, 101, a, b, d.phi0, d.phi1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            expect_rows_close(a[i], b[i]);
        }
    }
}

TEST(Kernels, SweepAgreesWithClassifierRatios) {
    std::mt19937_64 rng(84);
    auto phi0 = random_state(3, rng), phi1 = random_state(3, rng);
    auto xs = random_vector(50, rng), ys = random_vector(50, rng);
    std::vector<SweepRow> rows(50);
    kernels::pencil_sweep(std::span<const Complex, 8>(phi0.amplitudes().data(), 8),
                          std::span<const Complex, 8>(phi1.amplitudes().data(), 8), xs, ys, rows);
    for (std::size_t i = 0; i < 50; ++i) {
        std::array<Complex, 8> a{};
        for (std::size_t j = 0; j < 8; ++j) {
            a[j] = xs[i] * phi0[j] + ys[i] * phi1[j];
        }
        Complex inv = ghz_invariant(a);
        EXPECT_LE(std::abs(rows[i].inv - inv), 1e-12 * std::abs(inv));
        EXPECT_NEAR(rows[i].ghz_ratio, ghz_ratio(a), 1e-10 * ghz_ratio(a));
        auto cr = clause_ratios(a);
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_NEAR(rows[i].clause_ratio[k], std::max(cr[2 * k], cr[2 * k + 1]), 1e-12);
        }
    }
}

}  // namespace
}  // namespace slocc
