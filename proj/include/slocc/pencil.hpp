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

// Analysis of the projective line {x*phi0 + y*phi1} spanned by two 3-qubit
// vectors: which elements are GHZ, W, biseparable or fully separable.
//
// The GHZ invariant restricted to the line is a binary quartic in (x, y) and
// each clause quantity a binary quadratic. If the quartic is not identically
// zero the line is generically GHZ and its non-GHZ elements are the quartic's
// roots. Otherwise every element is non-GHZ and the elements below W are the
// common roots of some clause pair.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "slocc/exact.hpp"
#include "slocc/qstate.hpp"
#include "slocc/tri.hpp"

namespace slocc {

/// Point (x:y) of the complex projective line. Stored as a unit-norm pair
/// whose largest component is real and positive, so proportional inputs
/// produce the same representative.
struct ProjectivePoint {
    Complex x{1.0, 0.0};
    Complex y{0.0, 0.0};
    int multiplicity = 1;

    /// Throws ZeroState when x = y = 0.
    static ProjectivePoint make(Complex x, Complex y, int multiplicity = 1);
    static ProjectivePoint infinity() {
        return make(1.0, 0.0);
    }

    /// Compares the points only (chordal distance below 1e-12).
    friend bool operator==(const ProjectivePoint &a, const ProjectivePoint &b);
};

/// |x1 y2 - x2 y1| / (|(x1,y1)| |(x2,y2)|), in [0, 1].
double chordal_distance(const ProjectivePoint &a, const ProjectivePoint &b);

/// c[k] multiplies x^(4-k) y^k.
struct QuarticForm {
    std::array<WideComplex, 5> c{};
    /// Amplitude scale of the spanning vectors; the coefficient test falls
    /// back to eps * scale^4.
    double scale = 1.0;
    /// Largest ghz_ratio over the interpolation nodes, or negative when the
    /// form was not built from a pencil.
    double node_ratio = -1.0;

    Complex evaluate(Complex x, Complex y) const;
    WideComplex evaluate(WideComplex x, WideComplex y) const;
    bool is_identically_zero(double eps = kDefaultEps) const;
};

/// c[k] multiplies x^(2-k) y^k.
struct QuadraticForm {
    std::array<WideComplex, 3> c{};
    double scale = 1.0;
    double node_ratio = -1.0;

    Complex evaluate(Complex x, Complex y) const;
    bool is_identically_zero(double eps = kDefaultEps) const;
};

/// Clause k (1-based) is false exactly where both forms of pair k-1 vanish.
using ClauseQuadratics = std::array<std::array<QuadraticForm, 2>, 3>;

struct ExceptionalPoint {
    ProjectivePoint point;
    TriClass type;
};

struct SpanProfile {
    bool quartic_identically_zero = false;
    TriClass generic_type;
    /// Distinct non-generic elements of the line.
    std::vector<ExceptionalPoint> exceptional;
    bool contains_000 = false;
    /// Cut index of every Bisep exceptional point, sorted.
    std::vector<int> bisep_cuts;
    int w_points = 0;
    bool ghz_generic = false;
    bool exact = false;

    int count(TriClass::Kind kind) const;
};

/// x*phi0 + y*phi1.
PureState pencil_element(const PureState &phi0, const PureState &phi1, Complex x, Complex y);
PureState pencil_element(const PureState &phi0, const PureState &phi1, const ProjectivePoint &p);

/// Coefficients by interpolating the invariant at the five points t = x/y on
/// the fifth roots of unity. Throws ZeroState if either input vanishes.
QuarticForm quartic(const PureState &phi0, const PureState &phi1);

/// Projective roots, multiplicities summing to 4, roots within sqrt(eps) of
/// each other (chordally) merged. Throws IdenticallyZero.
std::vector<ProjectivePoint> quartic_roots(const QuarticForm &q, double eps = kDefaultEps);

/// Roots of a binary quadratic; both points of a line-wide zero are absent
/// (returns empty for an identically zero form).
std::vector<ProjectivePoint> quadratic_roots(const QuadraticForm &q, double eps = kDefaultEps);

/// The six clause quantities on the line, by interpolation at the cube roots
/// of unity.
ClauseQuadratics clause_quadratics(const PureState &phi0, const PureState &phi1);

/// Common projective zeros of a pair of binary quadratics. `whole_line` is
/// set when both forms vanish identically.
struct CommonRoots {
    std::vector<ProjectivePoint> points;
    bool whole_line = false;
};
CommonRoots common_roots(const QuadraticForm &a, const QuadraticForm &b, double eps = kDefaultEps);

/// Requires span_dimension(phi0, phi1) == 2 (DegenerateSpan otherwise).
SpanProfile analyze_span(const PureState &phi0, const PureState &phi1, double eps = kDefaultEps);

/// Classifies many points of the line at once through the SIMD sweep kernel.
std::vector<TriClass> sample_line(const PureState &phi0, const PureState &phi1,
                                  std::span<const ProjectivePoint> points,
                                  double eps = kDefaultEps);

// Exact path ---------------------------------------------------------------

/// Binary form over Q(i); c[j] multiplies x^(degree-j) y^j.
struct ExactBinaryForm {
    int degree = 0;
    std::vector<GaussianRational> c;

    static ExactBinaryForm linear(const GaussianRational &cx, const GaussianRational &cy);

    bool is_zero() const;
    bool vanishes_at_infinity() const {
        return c.front().is_zero();
    }
    /// Polynomial in t = x/y.
    ExactPoly dehomogenize() const;

    friend ExactBinaryForm operator+(const ExactBinaryForm &a, const ExactBinaryForm &b);
    friend ExactBinaryForm operator-(const ExactBinaryForm &a, const ExactBinaryForm &b);
    friend ExactBinaryForm operator*(const ExactBinaryForm &a, const ExactBinaryForm &b);
    ExactBinaryForm operator-() const;
};

ExactBinaryForm exact_quartic(const ExactState &phi0, const ExactState &phi1);
std::array<ExactBinaryForm, 6> exact_clause_quadratics(const ExactState &phi0,
                                                       const ExactState &phi1);

/// Exact analysis: types and counts of exceptional points come from gcds over
/// Q(i); the reported coordinates are numeric approximations.
SpanProfile analyze_span(const ExactState &phi0, const ExactState &phi1);

}  // namespace slocc
