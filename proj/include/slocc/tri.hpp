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

// Three-qubit SLOCC classification by polynomial criteria.
//
// With amplitudes a_0..a_7 of a_0|000> + ... + a_7|111>:
//   * GHZ iff  (a0a7 - a2a5 + a1a6 - a3a4)^2 - 4(a2a4 - a0a6)(a3a5 - a1a7) != 0;
//   * otherwise the three clauses
//       C1 = (a0a3 != a1a2  or  a5a6 != a4a7)
//       C2 = (a1a4 != a0a5  or  a3a6 != a2a7)
//       C3 = (a3a5 != a1a7  or  a2a4 != a0a6)
//     are all true on W, exactly Ck is true on Bisep(k), none on Sep000.

#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>

#include "slocc/qstate.hpp"

namespace slocc {

class ExactState;

/// Verdict for a 3-qubit state. Bisep(k): qubit k is in a product with an
/// entangled state of the other two.
struct TriClass {
    enum class Kind { Zero, Sep000, Bisep, W, GHZ };

    Kind kind = Kind::Zero;
    int cut = 0;

    static TriClass zero() {
        return {Kind::Zero, 0};
    }
    static TriClass sep000() {
        return {Kind::Sep000, 0};
    }
    static TriClass bisep(int k) {
        return {Kind::Bisep, k};
    }
    static TriClass w() {
        return {Kind::W, 0};
    }
    static TriClass ghz() {
        return {Kind::GHZ, 0};
    }

    bool genuine() const {
        return kind == Kind::W || kind == Kind::GHZ;
    }
    bool separable() const {
        return kind == Kind::Sep000 || kind == Kind::Bisep;
    }
    std::string label() const;
    /// Inverse of label(); throws ParseError.
    static TriClass parse(const std::string &text);

    auto operator<=>(const TriClass &) const = default;
};

struct ClauseReport {
    Complex ghz_value;
    std::array<bool, 3> clause_truth{};
    /// a0a3-a1a2, a5a6-a4a7, a1a4-a0a5, a3a6-a2a7, a3a5-a1a7, a2a4-a0a6.
    std::array<Complex, 6> quantities{};
};

namespace algebra {

// The polynomial criteria are written once over any commutative ring type so
// that the same expressions serve floating point, exact Gaussian rationals,
// and symbolic binary forms.

template <class T>
T times4(const T &v) {
    T d = v + v;
    return d + d;
}

template <class T>
T ghz_polynomial(const std::array<T, 8> &a) {
    T p = a[0] * a[7] - a[2] * a[5] + a[1] * a[6] - a[3] * a[4];
    T x = a[2] * a[4] - a[0] * a[6];
    T y = a[3] * a[5] - a[1] * a[7];
    return p * p - times4(x * y);
}

/// Amplitude indices entering each clause quantity (the 2x2 slice of the
/// 3-qubit tensor whose determinant it is, up to sign).
inline constexpr std::array<std::array<int, 4>, 6> kClauseSupport = {{
    {0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}, {1, 3, 5, 7}, {0, 2, 4, 6}}};

template <class T>
std::array<T, 6> clause_quantities(const std::array<T, 8> &a) {
    return {a[0] * a[3] - a[1] * a[2], a[5] * a[6] - a[4] * a[7],
            a[1] * a[4] - a[0] * a[5], a[3] * a[6] - a[2] * a[7],
            a[3] * a[5] - a[1] * a[7], a[2] * a[4] - a[0] * a[6]};
}

/// d/da_i of ghz_polynomial.
template <class T>
std::array<T, 8> ghz_gradient(const std::array<T, 8> &a) {
    T p = a[0] * a[7] - a[2] * a[5] + a[1] * a[6] - a[3] * a[4];
    T x = a[2] * a[4] - a[0] * a[6];
    T y = a[3] * a[5] - a[1] * a[7];
    T p2 = p + p;
    T x4 = times4(x);
    T y4 = times4(y);
    // d(p^2) = 2p dp,  d(-4xy) = -4(y dx + x dy)
    return {p2 * a[7] + y4 * a[6],  p2 * a[6] + x4 * a[7],  -(p2 * a[5]) - y4 * a[4],
            -(p2 * a[4]) - x4 * a[5], -(p2 * a[3]) - y4 * a[2], -(p2 * a[2]) - x4 * a[3],
            p2 * a[1] + y4 * a[0],  p2 * a[0] + x4 * a[1]};
}

}  // namespace algebra

/// The GHZ criterion polynomial. Evaluated in extended precision.
Complex ghz_invariant(std::span<const Complex, 8> a);
Complex ghz_invariant(const PureState &state);

/// Estimated relative distance from the state to the inv = 0 hypersurface:
/// with a scaled to max|a_i| = 1, min(|inv| / max|d inv/d a_i|, sqrt|inv|).
/// The square root takes over near Bisep and Sep000 states, where the
/// gradient vanishes. Zero for the zero vector.
double ghz_ratio(std::span<const Complex, 8> a);
double ghz_ratio(const std::array<WideComplex, 8> &a);

/// |q_i| / (max|a| * max of the amplitudes in q_i's slice): like ghz_ratio, a
/// first-order relative distance to q_i = 0. Zero when the slice vanishes.
std::array<double, 6> clause_ratios(std::span<const Complex, 8> a);

/// Clause k is true iff one of its two clause_ratios exceeds eps.
ClauseReport w_clauses(std::span<const Complex, 8> a, double eps = kDefaultEps);

/// Numeric classification. GHZ iff ghz_ratio > eps; otherwise the clause
/// verdicts of w_clauses. Throws AmbiguousClassification when exactly two
/// clauses hold.
TriClass classify3(const PureState &state, double eps = kDefaultEps);

/// Same decision procedure with exact zero tests.
TriClass classify3(const ExactState &state);

/// Product versus entangled for two qubits (determinant test, relative to
/// max|a|^2 in the numeric overload).
bool two_qubit_entangled(const PureState &state, double eps = kDefaultEps);

}  // namespace slocc
