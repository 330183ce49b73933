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


#include "slocc/tri.hpp"

#include <algorithm>
#include <cmath>

#include "slocc/error.hpp"
#include "slocc/exact.hpp"

namespace slocc {

namespace {

std::array<WideComplex, 8> widen(std::span<const Complex, 8> a) {
    std::array<WideComplex, 8> w;
    for (std::size_t i = 0; i < 8; ++i) {
        w[i] = WideComplex(a[i]);
    }
    return w;
}

long double max_abs(const std::array<WideComplex, 8> &a) {
    long double m = 0;
    for (const auto &v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

std::span<const Complex, 8> amps3(const PureState &state) {
    if (state.qubits() != 3) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected a 3-qubit state, got " + std::to_string(state.qubits()));
    }
    return std::span<const Complex, 8>(state.amplitudes().data(), 8);
}

TriClass from_clauses(const std::array<bool, 3> &truth) {
    int count = static_cast<int>(std::count(truth.begin(), truth.end(), true));
    switch (count) {
        case 3:
            return TriClass::w();
        case 0:
            return TriClass::sep000();
        case 1:
            return TriClass::bisep(static_cast<int>(std::find(truth.begin(), truth.end(), true) -
                                                    truth.begin()) +
                                   1);
        default:
            throw Error(ErrorCode::AmbiguousClassification,
                        "exactly two W clauses hold; the tolerance straddles a class boundary");
    }
}

}  // namespace

std::string TriClass::label() const {
    switch (kind) {
        case Kind::Zero:
            return "Zero";
        case Kind::Sep000:
            return "Sep000";
        case Kind::Bisep:
            return "Bisep(" + std::to_string(cut) + ")";
        case Kind::W:
            return "W";
        case Kind::GHZ:
            return "GHZ";
    }
    return "?";
}

TriClass TriClass::parse(const std::string &text) {
    if (text == "Zero") {
        return zero();
    }
    if (text == "Sep000") {
        return sep000();
    }
    if (text == "W") {
        return w();
    }
    if (text == "GHZ") {
        return ghz();
    }
    if (text.size() == 8 && text.starts_with("Bisep(") && text.back() == ')' && text[6] >= '1' &&
        text[6] <= '3') {
        return bisep(text[6] - '0');
    }
    throw Error(ErrorCode::ParseError, "unknown 3-qubit class '" + text + "'");
}

Complex ghz_invariant(std::span<const Complex, 8> a) {
    WideComplex v = algebra::ghz_polynomial(widen(a));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex ghz_invariant(const PureState &state) {
    return ghz_invariant(amps3(state));
}

double ghz_ratio(std::span<const Complex, 8> a) {
    return ghz_ratio(widen(a));
}

namespace {

// The invariant is evaluated beyond long double: at Bisep and Sep000 states
// its gradient vanishes, so a long double rounding floor (about 1e-20) in
// |inv| over a gradient of input-noise size (about 1e-16) would read as a
// ratio near 1e-4. Quad precision pushes the floor to about 1e-34.
#if defined(__SIZEOF_FLOAT128__)
using Quad = __float128;
#else
using Quad = long double;
#endif

struct QuadComplex {
    Quad re = 0;
    Quad im = 0;

    friend QuadComplex operator+(QuadComplex a, QuadComplex b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend QuadComplex operator-(QuadComplex a, QuadComplex b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend QuadComplex operator*(QuadComplex a, QuadComplex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    long double abs() const {
        return std::hypot(static_cast<long double>(re), static_cast<long double>(im));
    }
};

}  // namespace

double ghz_ratio(const std::array<WideComplex, 8> &a) {
    auto w = a;
    long double am = max_abs(w);
    if (am == 0) {
        return 0.0;
    }
    // Normalizing keeps intermediate products in range for any input scale.
    for (auto &v : w) {
        v /= am;
    }
    long double gm = 0;
    for (const auto &g : algebra::ghz_gradient(w)) {
        gm = std::max(gm, std::abs(g));
    }
    std::array<QuadComplex, 8> q;
    for (std::size_t i = 0; i < 8; ++i) {
        q[i] = {static_cast<Quad>(w[i].real()), static_cast<Quad>(w[i].imag())};
    }
    long double inv = algebra::ghz_polynomial(q).abs();
    if (inv == 0) {
        return 0.0;
    }
    // First-order distance |inv| / |grad| to the hypersurface, capped by the
    // second-order estimate sqrt|inv| that governs near its singular locus.
    long double second = std::sqrt(inv);
    return static_cast<double>(gm > 0 ? std::min(inv / gm, second) : second);
}

std::array<double, 6> clause_ratios(std::span<const Complex, 8> a) {
    auto w = widen(a);
    long double am = max_abs(w);
    std::array<double, 6> out{};
    if (am == 0) {
        return out;
    }
    auto q = algebra::clause_quantities(w);
    for (std::size_t i = 0; i < 6; ++i) {
        long double g = 0;
        for (int idx : algebra::kClauseSupport[i]) {
            g = std::max(g, std::abs(w[static_cast<std::size_t>(idx)]));
        }
        out[i] = g > 0 ? static_cast<double>(std::abs(q[i]) / (am * g)) : 0.0;
    }
    return out;
}

ClauseReport w_clauses(std::span<const Complex, 8> a, double eps) {
    auto w = widen(a);
    ClauseReport r;
    r.ghz_value = ghz_invariant(a);
    auto q = algebra::clause_quantities(w);
    for (std::size_t i = 0; i < 6; ++i) {
        r.quantities[i] = {static_cast<double>(q[i].real()), static_cast<double>(q[i].imag())};
    }
    auto ratio = clause_ratios(a);
    for (std::size_t k = 0; k < 3; ++k) {
        r.clause_truth[k] = ratio[2 * k] > eps || ratio[2 * k + 1] > eps;
    }
    return r;
}

TriClass classify3(const PureState &state, double eps) {
    auto a = amps3(state);
    if (state.max_abs() == 0) {
        return TriClass::zero();
    }
    if (ghz_ratio(a) > eps) {
        return TriClass::ghz();
    }
    return from_clauses(w_clauses(a, eps).clause_truth);
}

TriClass classify3(const ExactState &state) {
    if (state.qubits() != 3) {
        throw Error(ErrorCode::DimensionMismatch, "expected a 3-qubit state");
    }
    if (state.is_zero()) {
        return TriClass::zero();
    }
    std::array<GaussianRational, 8> a;
    std::copy(state.amplitudes().begin(), state.amplitudes().end(), a.begin());
    if (!algebra::ghz_polynomial(a).is_zero()) {
        return TriClass::ghz();
    }
    auto q = algebra::clause_quantities(a);
    std::array<bool, 3> truth;
    for (std::size_t k = 0; k < 3; ++k) {
        truth[k] = !q[2 * k].is_zero() || !q[2 * k + 1].is_zero();
    }
    return from_clauses(truth);
}

bool two_qubit_entangled(const PureState &state, double eps) {
    if (state.qubits() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "expected a 2-qubit state");
    }
    double m = state.max_abs();
    if (m == 0) {
        throw Error(ErrorCode::ZeroState, "zero 2-qubit state");
    }
    return std::abs(state[0] * state[3] - state[1] * state[2]) > eps * m * m;
}

}  // namespace slocc
