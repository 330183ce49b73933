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


#include "slocc/pencil.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <numbers>
#include <random>

#include "slocc/error.hpp"
#include "slocc/kernels.hpp"

namespace slocc {

namespace {

using Wide = long double;
using WideVec = std::vector<WideComplex>;
using WideMatrix = Eigen::Matrix<WideComplex, Eigen::Dynamic, Eigen::Dynamic>;

void require_pencil(const PureState &phi0, const PureState &phi1) {
    if (phi0.qubits() != 3 || phi1.qubits() != 3) {
        throw Error(ErrorCode::DimensionMismatch, "pencil components must be 3-qubit states");
    }
    if (phi0.is_zero() || phi1.is_zero()) {
        throw Error(ErrorCode::ZeroState, "pencil component is zero");
    }
}

WideComplex root_of_unity(int j, int n) {
    Wide a = 2 * std::numbers::pi_v<Wide> * static_cast<Wide>(j) / static_cast<Wide>(n);
    return {std::cos(a), std::sin(a)};
}

std::array<WideComplex, 8> element(const PureState &phi0, const PureState &phi1, WideComplex x,
                                   WideComplex y) {
    std::array<WideComplex, 8> a;
    for (std::size_t i = 0; i < 8; ++i) {
        a[i] = x * WideComplex(phi0[i]) + y * WideComplex(phi1[i]);
    }
    return a;
}

Wide max_abs(const std::array<WideComplex, 8> &a) {
    Wide m = 0;
    for (const auto &v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// Coefficients c[k] of x^(d-k) y^k from values at (w^j, 1), w = exp(2 pi i/(d+1)).
WideVec interpolate(const WideVec &values) {
    int n = static_cast<int>(values.size());
    int d = n - 1;
    WideVec c(values.size());
    for (int m = 0; m <= d; ++m) {
        WideComplex acc = 0;
        for (int j = 0; j < n; ++j) {
            acc += values[static_cast<std::size_t>(j)] * root_of_unity(-j * m, n);
        }
        c[static_cast<std::size_t>(d - m)] = acc / static_cast<Wide>(n);
    }
    return c;
}

WideComplex evaluate_form(const WideVec &c, WideComplex x, WideComplex y) {
    int d = static_cast<int>(c.size()) - 1;
    // Horner in whichever of t = x/y, s = y/x is bounded.
    if (std::abs(y) >= std::abs(x)) {
        WideComplex t = x / y, acc = 0;
        for (int k = 0; k <= d; ++k) {
            acc = acc * t + c[static_cast<std::size_t>(k)];
        }
        return acc * std::pow(y, d);
    }
    WideComplex s = y / x, acc = 0;
    for (int k = d; k >= 0; --k) {
        acc = acc * s + c[static_cast<std::size_t>(k)];
    }
    return acc * std::pow(x, d);
}

// Fixed probe points for choosing a chart; a form of degree <= 4 cannot
// vanish at all of them.
const std::array<std::pair<WideComplex, WideComplex>, 8> &chart_candidates() {
    static const auto pts = [] {
        const Wide r = 1 / std::sqrt(Wide{2});
        std::array<std::pair<WideComplex, WideComplex>, 8> p = {{
            {{1, 0}, {0, 0}},
            {{0, 0}, {1, 0}},
            {{r, 0}, {r, 0}},
            {{r, 0}, {-r, 0}},
            {{r, 0}, {0, r}},
            {{r, 0}, {0, -r}},
            {{0.6L, 0}, {0.48L, 0.64L}},
            {{0.8L, 0}, {-0.36L, 0.48L}},
        }};
        return p;
    }();
    return pts;
}

WideComplex poly_eval(const WideVec &monic_high_first, WideComplex t) {
    WideComplex acc = 0;
    for (const auto &c : monic_high_first) {
        acc = acc * t + c;
    }
    return acc;
}

WideVec poly_derivative(const WideVec &p) {
    // p highest degree first.
    int d = static_cast<int>(p.size()) - 1;
    WideVec out;
    for (int k = 0; k < d; ++k) {
        out.push_back(p[static_cast<std::size_t>(k)] * static_cast<Wide>(d - k));
    }
    return out;
}

// Roots of a polynomial given highest degree first, with p[0] != 0.
WideVec poly_roots(const WideVec &p) {
    int d = static_cast<int>(p.size()) - 1;
    if (d < 1) {
        return {};
    }
    if (d == 1) {
        return {-p[1] / p[0]};
    }
    WideMatrix comp = WideMatrix::Zero(d, d);
    for (int i = 1; i < d; ++i) {
        comp(i, i - 1) = 1;
    }
    for (int i = 0; i < d; ++i) {
        comp(i, d - 1) = -p[static_cast<std::size_t>(d - i)] / p[0];
    }
    Eigen::ComplexEigenSolver<WideMatrix> solver(comp, false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalBreakdown, "companion eigenvalue iteration failed");
    }
    WideVec out;
    for (int i = 0; i < d; ++i) {
        out.push_back(solver.eigenvalues()(i));
    }
    return out;
}

Wide chordal(WideComplex x1, WideComplex y1, WideComplex x2, WideComplex y2) {
    Wide n1 = std::sqrt(std::norm(x1) + std::norm(y1));
    Wide n2 = std::sqrt(std::norm(x2) + std::norm(y2));
    return std::abs(x1 * y2 - x2 * y1) / (n1 * n2);
}

// Single-linkage clusters of n items: label[i] is the smallest index of
// i's cluster, so label[i] == i marks a representative.
template <class Near>
std::vector<int> single_linkage(std::size_t n, Near near) {
    std::vector<int> label(n);
    for (std::size_t i = 0; i < n; ++i) {
        label[i] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (label[i] != label[j] && near(i, j)) {
                int from = std::max(label[i], label[j]), to = std::min(label[i], label[j]);
                for (auto &l : label) {
                    if (l == from) {
                        l = to;
                    }
                }
            }
        }
    }
    return label;
}

using RootLink = std::function<bool(const ProjectivePoint &, const ProjectivePoint &)>;

ProjectivePoint to_point(WideComplex x, WideComplex y, int multiplicity = 1) {
    return ProjectivePoint::make(Complex(static_cast<double>(x.real()), static_cast<double>(x.imag())),
                                 Complex(static_cast<double>(y.real()), static_cast<double>(y.imag())),
                                 multiplicity);
}

// Projective roots of sum c[k] x^(d-k) y^k. Roots within `radius` of each
// other, or joined by `link`, form one root of higher multiplicity.
std::vector<ProjectivePoint> form_roots(const WideVec &c, double radius, const RootLink &link = {}) {
    int d = static_cast<int>(c.size()) - 1;
    std::pair<WideComplex, WideComplex> best = chart_candidates()[0];
    Wide best_value = -1;
    for (const auto &cand : chart_candidates()) {
        Wide v = std::abs(evaluate_form(c, cand.first, cand.second));
        if (v > best_value) {
            best_value = v;
            best = cand;
        }
    }
    if (best_value <= 0) {
        throw Error(ErrorCode::IdenticallyZero, "binary form vanishes at every chart probe");
    }
    // Rotated form f'(X, Y) = f(u X - conj(v) Y, v X + conj(u) Y); its X^d
    // coefficient f(u, v) is the largest available leading coefficient.
    auto [u, v] = best;
    WideVec values;
    for (int j = 0; j <= d; ++j) {
        WideComplex X = root_of_unity(j, d + 1);
        values.push_back(evaluate_form(c, u * X - std::conj(v), v * X + std::conj(u)));
    }
    WideVec rotated = interpolate(values);
    rotated[0] = evaluate_form(c, u, v);
    WideVec monic;
    for (const auto &r : rotated) {
        monic.push_back(r / rotated[0]);
    }
    WideVec ts = poly_roots(monic);

    std::vector<ProjectivePoint> raw;
    if (link) {
        for (const auto &t : ts) {
            raw.push_back(to_point(u * t - std::conj(v), v * t + std::conj(u)));
        }
    }
    auto label = single_linkage(ts.size(), [&](std::size_t i, std::size_t j) {
        return chordal(ts[i], 1, ts[j], 1) < radius || (link && link(raw[i], raw[j]));
    });
    std::vector<ProjectivePoint> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (label[i] != static_cast<int>(i)) {
            continue;
        }
        WideComplex t0 = 0;
        int m = 0;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (label[j] == static_cast<int>(i)) {
                t0 += ts[j];
                ++m;
            }
        }
        t0 /= static_cast<Wide>(m);
        Wide spread = radius;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (label[j] == static_cast<int>(i)) {
                spread = std::max(spread, chordal(ts[j], 1, t0, 1));
            }
        }
        // Newton on the (m-1)-th derivative, which has a simple root at an
        // m-fold root of the polynomial.
        WideVec g = monic;
        for (int k = 1; k < m; ++k) {
            g = poly_derivative(g);
        }
        WideVec dg = poly_derivative(g);
        WideComplex t = t0;
        for (int it = 0; it < 30; ++it) {
            WideComplex den = poly_eval(dg, t);
            if (den == WideComplex{}) {
                break;
            }
            WideComplex step = poly_eval(g, t) / den;
            t -= step;
            if (std::abs(step) <= 1e-18L * (1 + std::abs(t))) {
                break;
            }
        }
        if (!std::isfinite(std::abs(t)) || chordal(t, 1, t0, 1) > std::max<Wide>(spread, 1e-6L)) {
            t = t0;
        }
        WideComplex x = u * t - std::conj(v);
        WideComplex y = v * t + std::conj(u);
        out.push_back(to_point(x, y, m));
    }
    return out;
}

TriClass classify_element(const PureState &phi0, const PureState &phi1, const ProjectivePoint &p,
                          double eps) {
    return classify3(pencil_element(phi0, phi1, p), eps);
}

int class_rank(const TriClass &c) {
    switch (c.kind) {
        case TriClass::Kind::Zero:
            return 0;
        case TriClass::Kind::Sep000:
            return 1;
        case TriClass::Kind::Bisep:
            return 2;
        case TriClass::Kind::W:
            return 3;
        case TriClass::Kind::GHZ:
            return 4;
    }
    return 5;
}

ProjectivePoint midpoint(const ProjectivePoint &a, const ProjectivePoint &b) {
    Complex ip = std::conj(a.x) * b.x + std::conj(a.y) * b.y;
    Complex phase = std::abs(ip) > 0 ? std::conj(ip) / std::abs(ip) : Complex(1.0);
    return ProjectivePoint::make(a.x + phase * b.x, a.y + phase * b.y);
}

// Two nearby elements of classes below `generic` are one exceptional point
// when the element halfway between them is below `generic` too: distinct
// exceptional points are separated by generic elements. The classes may
// differ where a clause vanishes to second order and crosses eps.
bool joined_by_midpoint(const PureState &u0, const PureState &u1, const ExceptionalPoint &a,
                        const ExceptionalPoint &b, const TriClass &generic, double reach, double eps) {
    int top = class_rank(generic);
    if (class_rank(a.type) >= top || class_rank(b.type) >= top || chordal_distance(a.point, b.point) > reach) {
        return false;
    }
    try {
        return class_rank(classify_element(u0, u1, midpoint(a.point, b.point), eps)) < top;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::AmbiguousClassification) {
            throw;
        }
        return false;
    }
}

void summarize(SpanProfile &p) {
    p.contains_000 = false;
    p.bisep_cuts.clear();
    p.w_points = 0;
    for (const auto &e : p.exceptional) {
        switch (e.type.kind) {
            case TriClass::Kind::Sep000:
                p.contains_000 = true;
                break;
            case TriClass::Kind::Bisep:
                p.bisep_cuts.push_back(e.type.cut);
                break;
            case TriClass::Kind::W:
                ++p.w_points;
                break;
            default:
                break;
        }
    }
    std::sort(p.bisep_cuts.begin(), p.bisep_cuts.end());
    p.ghz_generic = p.generic_type.kind == TriClass::Kind::GHZ;
}

// Orthonormal basis (u0, u1) of span(phi0, phi1) and the map back:
// x' u0 + y' u1 = (x' a + y' b) phi0 + (y' c) phi1.
struct LineBasis {
    PureState u0;
    PureState u1;
    Complex a, b, c;

    ProjectivePoint to_original(const ProjectivePoint &p) const {
        return ProjectivePoint::make(p.x * a + p.y * b, p.y * c, p.multiplicity);
    }
};

LineBasis orthonormalize(const PureState &phi0, const PureState &phi1) {
    double n0 = phi0.norm();
    PureState u0 = phi0.scaled(1.0 / n0);
    Complex overlap = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        overlap += std::conj(u0[i]) * phi1[i];
    }
    PureState r = phi1 + u0.scaled(-overlap);
    double n1 = r.norm();
    PureState u1 = r.scaled(1.0 / n1);
    return {u0, u1, 1.0 / n0, -overlap / (n0 * n1), 1.0 / n1};
}

TriClass generic_probe(const PureState &u0, const PureState &u1, double eps) {
    std::mt19937_64 rng(0x5eed0001);
    std::normal_distribution<double> g;
    auto probe = [&] {
        Complex x(g(rng), g(rng)), y(g(rng), g(rng));
        return classify3(pencil_element(u0, u1, x, y), eps);
    };
    TriClass first = probe();
    TriClass second = probe();
    if (first == second) {
        return first;
    }
    TriClass third = probe();
    if (third == first || third == second) {
        return third;
    }
    throw Error(ErrorCode::GenericTypeUnstable,
                "generic probes disagree: " + first.label() + ", " + second.label() + ", " +
                    third.label());
}

}  // namespace

ProjectivePoint ProjectivePoint::make(Complex x, Complex y, int multiplicity) {
    double n = std::hypot(std::abs(x), std::abs(y));
    if (n == 0 || !std::isfinite(n)) {
        throw Error(ErrorCode::ZeroState, "projective point (0:0)");
    }
    x /= n;
    y /= n;
    Complex lead = std::abs(x) >= std::abs(y) ? x : y;
    Complex phase = std::conj(lead) / std::abs(lead);
    return {x * phase, y * phase, multiplicity};
}

bool operator==(const ProjectivePoint &a, const ProjectivePoint &b) {
    return chordal_distance(a, b) < 1e-12;
}

double chordal_distance(const ProjectivePoint &a, const ProjectivePoint &b) {
    return static_cast<double>(chordal(WideComplex(a.x), WideComplex(a.y), WideComplex(b.x),
                                       WideComplex(b.y)));
}

Complex QuarticForm::evaluate(Complex x, Complex y) const {
    WideComplex v = evaluate(WideComplex(x), WideComplex(y));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

WideComplex QuarticForm::evaluate(WideComplex x, WideComplex y) const {
    return evaluate_form(WideVec(c.begin(), c.end()), x, y);
}

bool QuarticForm::is_identically_zero(double eps) const {
    if (node_ratio >= 0) {
        return node_ratio <= eps;
    }
    Wide bound = static_cast<Wide>(eps) * std::pow(static_cast<Wide>(scale), 4);
    return std::all_of(c.begin(), c.end(), [&](const WideComplex &v) { return std::abs(v) <= bound; });
}

Complex QuadraticForm::evaluate(Complex x, Complex y) const {
    WideComplex v = evaluate_form(WideVec(c.begin(), c.end()), x, y);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

bool QuadraticForm::is_identically_zero(double eps) const {
    if (node_ratio >= 0) {
        return node_ratio <= eps;
    }
    Wide bound = static_cast<Wide>(eps) * static_cast<Wide>(scale) * static_cast<Wide>(scale);
    return std::all_of(c.begin(), c.end(), [&](const WideComplex &v) { return std::abs(v) <= bound; });
}

int SpanProfile::count(TriClass::Kind kind) const {
    return static_cast<int>(std::count_if(exceptional.begin(), exceptional.end(),
                                          [&](const ExceptionalPoint &e) { return e.type.kind == kind; }));
}

PureState pencil_element(const PureState &phi0, const PureState &phi1, Complex x, Complex y) {
    return x * phi0 + y * phi1;
}

PureState pencil_element(const PureState &phi0, const PureState &phi1, const ProjectivePoint &p) {
    return pencil_element(phi0, phi1, p.x, p.y);
}

QuarticForm quartic(const PureState &phi0, const PureState &phi1) {
    require_pencil(phi0, phi1);
    QuarticForm q;
    WideVec values;
    q.node_ratio = 0;
    for (int j = 0; j < 5; ++j) {
        auto a = element(phi0, phi1, root_of_unity(j, 5), 1);
        values.push_back(algebra::ghz_polynomial(a));
        q.node_ratio = std::max(q.node_ratio, ghz_ratio(a));
    }
    WideVec c = interpolate(values);
    std::copy(c.begin(), c.end(), q.c.begin());
    q.scale = std::max(phi0.max_abs(), phi1.max_abs());
    return q;
}

std::vector<ProjectivePoint> quartic_roots(const QuarticForm &q, double eps) {
    if (q.is_identically_zero(eps)) {
        throw Error(ErrorCode::IdenticallyZero, "quartic vanishes identically");
    }
    auto roots = form_roots(WideVec(q.c.begin(), q.c.end()), std::sqrt(eps));
    std::sort(roots.begin(), roots.end(), [](const ProjectivePoint &a, const ProjectivePoint &b) {
        return std::abs(a.y) < std::abs(b.y);
    });
    return roots;
}

std::vector<ProjectivePoint> quadratic_roots(const QuadraticForm &q, double eps) {
    if (q.is_identically_zero(eps)) {
        return {};
    }
    return form_roots(WideVec(q.c.begin(), q.c.end()), std::sqrt(eps));
}

ClauseQuadratics clause_quadratics(const PureState &phi0, const PureState &phi1) {
    require_pencil(phi0, phi1);
    std::array<WideVec, 6> values;
    for (int j = 0; j < 3; ++j) {
        auto q = algebra::clause_quantities(element(phi0, phi1, root_of_unity(j, 3), 1));
        for (std::size_t i = 0; i < 6; ++i) {
            values[i].push_back(q[i]);
        }
    }
    std::array<double, 6> ratio{};
    for (int j = 0; j < 5; ++j) {
        auto a = element(phi0, phi1, root_of_unity(j, 5), 1);
        Wide m = max_abs(a);
        auto q = algebra::clause_quantities(a);
        for (std::size_t i = 0; i < 6; ++i) {
            ratio[i] = std::max(ratio[i], static_cast<double>(std::abs(q[i]) / (m * m)));
        }
    }
    double scale = std::max(phi0.max_abs(), phi1.max_abs());
    ClauseQuadratics out;
    for (std::size_t i = 0; i < 6; ++i) {
        WideVec c = interpolate(values[i]);
        QuadraticForm &f = out[i / 2][i % 2];
        std::copy(c.begin(), c.end(), f.c.begin());
        f.scale = scale;
        f.node_ratio = ratio[i];
    }
    return out;
}

CommonRoots common_roots(const QuadraticForm &a, const QuadraticForm &b, double eps) {
    bool za = a.is_identically_zero(eps);
    bool zb = b.is_identically_zero(eps);
    if (za && zb) {
        return {{}, true};
    }
    if (za) {
        return {quadratic_roots(b, eps), false};
    }
    if (zb) {
        return {quadratic_roots(a, eps), false};
    }
    // Pairwise matching of polished roots; a double root of either form is
    // located far more accurately this way than by a kernel vector of the
    // coefficient matrix.
    double radius = std::sqrt(eps);
    auto rb = quadratic_roots(b, eps);
    CommonRoots out;
    for (const auto &p : quadratic_roots(a, eps)) {
        for (const auto &q : rb) {
            if (chordal_distance(p, q) < radius) {
                ProjectivePoint r = p;
                r.multiplicity = std::min(p.multiplicity, q.multiplicity);
                out.points.push_back(r);
                break;
            }
        }
    }
    return out;
}

namespace {

// Bisep and Sep000 elements are multiple roots of the quartic, which split
// by up to eps^(1/4) and leave the cluster centre a poor estimate: clause
// ratios there can sit between eps and sqrt(eps). Such a point is also a
// common root of the vanishing clause pairs, which is far better located.
// `t` is the verdict at r, or empty when it was ambiguous.
ExceptionalPoint refine_multiple_root(const PureState &u0, const PureState &u1, const ProjectivePoint &r,
                                      std::optional<TriClass> t, double eps) {
    double reach = std::pow(eps, 0.25);
    auto quads = clause_quadratics(u0, u1);
    ExceptionalPoint best{r, t.value_or(TriClass::w())};
    std::array<bool, 3> truth{};
    int count = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        auto common = common_roots(quads[k][0], quads[k][1], eps);
        bool vanishes = common.whole_line;
        for (const auto &p : common.points) {
            if (chordal_distance(p, r) > reach) {
                continue;
            }
            vanishes = true;
            try {
                TriClass c = classify_element(u0, u1, p, eps);
                if (class_rank(c) < class_rank(best.type) || !t) {
                    best = {ProjectivePoint::make(p.x, p.y, r.multiplicity), c};
                    t = c;
                }
            } catch (const Error &e) {
                if (e.code() != ErrorCode::AmbiguousClassification) {
                    throw;
                }
            }
        }
        truth[k] = !vanishes;
        count += truth[k] ? 1 : 0;
    }
    if (t) {
        return best;
    }
    // Every nearby common root was ambiguous too: decide each clause by
    // whether its pair has a common root near r.
    switch (count) {
        case 0:
            return {r, TriClass::sep000()};
        case 1:
            return {r, TriClass::bisep(truth[0] ? 1 : truth[1] ? 2 : 3)};
        case 3:
            return {r, TriClass::w()};
        default:
            throw Error(ErrorCode::AmbiguousClassification, "exactly two W clauses hold at a quartic root");
    }
}

}  // namespace

SpanProfile analyze_span(const PureState &phi0, const PureState &phi1, double eps) {
    require_pencil(phi0, phi1);
    if (span_dimension(phi0, phi1, eps) != 2) {
        throw Error(ErrorCode::DegenerateSpan, "phi0 and phi1 are linearly dependent");
    }
    LineBasis basis = orthonormalize(phi0, phi1);
    const PureState &u0 = basis.u0;
    const PureState &u1 = basis.u1;

    SpanProfile profile;
    QuarticForm q = quartic(u0, u1);
    if (!q.is_identically_zero(eps)) {
        profile.generic_type = TriClass::ghz();
        // Distinct roots can lie far closer than sqrt(eps) when the spanning
        // vectors are nearly non-GHZ, and a k-fold root splits by up to
        // eps^(1/k). Roots within eps^(1/4) are one root unless a GHZ element
        // separates them. An ambiguous verdict already has ghz_ratio <= eps,
        // so it counts as non-GHZ here.
        auto below_ghz = [&](const ProjectivePoint &p) {
            try {
                return classify_element(u0, u1, p, eps).kind != TriClass::Kind::GHZ;
            } catch (const Error &e) {
                if (e.code() != ErrorCode::AmbiguousClassification) {
                    throw;
                }
                return true;
            }
        };
        auto link = [&](const ProjectivePoint &a, const ProjectivePoint &b) {
            double d = chordal_distance(a, b);
            if (d < std::sqrt(eps)) {
                return below_ghz(midpoint(a, b));
            }
            return d <= std::pow(eps, 0.25) && below_ghz(a) && below_ghz(b) && below_ghz(midpoint(a, b));
        };
        for (const auto &r : form_roots(WideVec(q.c.begin(), q.c.end()), 1e-12, link)) {
            std::optional<TriClass> t;
            try {
                t = classify_element(u0, u1, r, eps);
            } catch (const Error &e) {
                if (e.code() != ErrorCode::AmbiguousClassification) {
                    throw;
                }
            }
            ExceptionalPoint e{r, t.value_or(TriClass::w())};
            if (r.multiplicity >= 2 || !t) {
                e = refine_multiple_root(u0, u1, r, t, eps);
            }
            if (e.type.kind == TriClass::Kind::GHZ) {
                throw Error(ErrorCode::NumericalBreakdown, "root of the invariant quartic tests as GHZ");
            }
            profile.exceptional.push_back({basis.to_original(e.point), e.type});
        }
    } else {
        profile.quartic_identically_zero = true;
        profile.generic_type = generic_probe(u0, u1, eps);
        auto quads = clause_quadratics(u0, u1);
        std::vector<ProjectivePoint> candidates;
        for (const auto &pair : quads) {
            auto common = common_roots(pair[0], pair[1], eps);
            candidates.insert(candidates.end(), common.points.begin(), common.points.end());
            for (const auto &f : pair) {
                auto r = quadratic_roots(f, eps);
                candidates.insert(candidates.end(), r.begin(), r.end());
            }
        }
        // Group candidates that approximate the same point and keep the
        // lowest verdict in each group. A candidate with exactly two clauses
        // true is a near-common root of a single pair, which no Sep000 or
        // Bisep point can be. It is dropped when both true clauses exceed
        // 100 eps (well-located roots show ratios near 1e-14), and otherwise
        // must lie within eps^(1/4) of a resolved lower-class group: a poorly
        // conditioned double root of one quadratic can sit that far out.
        std::vector<ExceptionalPoint> resolved;
        std::vector<ProjectivePoint> unresolved;
        double radius = std::sqrt(eps);
        for (const auto &cand : candidates) {
            ProjectivePoint p = cand;
            p.multiplicity = 1;
            try {
                resolved.push_back({p, classify_element(u0, u1, p, eps)});
            } catch (const Error &e) {
                if (e.code() != ErrorCode::AmbiguousClassification) {
                    throw;
                }
                PureState elem = pencil_element(u0, u1, p);
                auto ratio = clause_ratios(std::span<const Complex, 8>(elem.amplitudes().data(), 8));
                int clear = 0;
                for (std::size_t k = 0; k < 3; ++k) {
                    clear += std::max(ratio[2 * k], ratio[2 * k + 1]) > 100 * eps ? 1 : 0;
                }
                if (clear < 2) {
                    unresolved.push_back(p);
                }
            }
        }
        // A double root of a perturbed square splits, sometimes by more than
        // the radius. Two nearby candidates of the same lower class are one
        // point when the element halfway between them has that class too:
        // distinct exceptional points are separated by generic elements.
        auto label = single_linkage(resolved.size(), [&](std::size_t i, std::size_t j) {
            const auto &a = resolved[i];
            const auto &b = resolved[j];
            return chordal_distance(a.point, b.point) < radius ||
                   joined_by_midpoint(u0, u1, a, b, profile.generic_type, std::sqrt(radius), eps);
        });
        std::vector<ExceptionalPoint> groups;
        std::vector<int> group_of(resolved.size(), -1);
        for (std::size_t i = 0; i < resolved.size(); ++i) {
            auto rep = static_cast<std::size_t>(label[i]);
            if (group_of[rep] < 0) {
                group_of[rep] = static_cast<int>(groups.size());
                groups.push_back(resolved[i]);
            } else if (class_rank(resolved[i].type) < class_rank(groups[static_cast<std::size_t>(group_of[rep])].type)) {
                groups[static_cast<std::size_t>(group_of[rep])] = resolved[i];
            }
        }
        for (const auto &p : unresolved) {
            bool covered = std::any_of(groups.begin(), groups.end(), [&](const ExceptionalPoint &g) {
                return class_rank(g.type) < class_rank(profile.generic_type) &&
                       chordal_distance(g.point, p) < std::sqrt(radius);
            });
            if (!covered) {
                throw Error(ErrorCode::AmbiguousClassification,
                            "line element with exactly two clauses true");
            }
        }
        for (const auto &g : groups) {
            if (g.type != profile.generic_type && g.type.kind != TriClass::Kind::GHZ) {
                profile.exceptional.push_back({basis.to_original(g.point), g.type});
            }
        }
    }
    summarize(profile);
    return profile;
}

std::vector<TriClass> sample_line(const PureState &phi0, const PureState &phi1,
                                  std::span<const ProjectivePoint> points, double eps) {
    require_pencil(phi0, phi1);
    std::vector<Complex> xs, ys;
    for (const auto &p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::vector<kernels::SweepRow> rows(points.size());
    kernels::pencil_sweep(std::span<const Complex, 8>(phi0.amplitudes().data(), 8),
                          std::span<const Complex, 8>(phi1.amplitudes().data(), 8), xs, ys, rows);
    std::vector<TriClass> out;
    out.reserve(rows.size());
    for (const auto &r : rows) {
        if (r.ghz_ratio > eps) {
            out.push_back(TriClass::ghz());
            continue;
        }
        std::array<bool, 3> truth;
        for (int k = 0; k < 3; ++k) {
            truth[static_cast<std::size_t>(k)] = r.clause_ratio[static_cast<std::size_t>(k)] > eps;
        }
        int count = static_cast<int>(std::count(truth.begin(), truth.end(), true));
        if (count == 3) {
            out.push_back(TriClass::w());
        } else if (count == 0) {
            out.push_back(TriClass::sep000());
        } else if (count == 1) {
            out.push_back(TriClass::bisep(
                static_cast<int>(std::find(truth.begin(), truth.end(), true) - truth.begin()) + 1));
        } else {
            throw Error(ErrorCode::AmbiguousClassification, "exactly two W clauses hold on the line");
        }
    }
    return out;
}

// Exact path ---------------------------------------------------------------

ExactBinaryForm ExactBinaryForm::linear(const GaussianRational &cx, const GaussianRational &cy) {
    return {1, {cx, cy}};
}

bool ExactBinaryForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const GaussianRational &v) { return v.is_zero(); });
}

ExactPoly ExactBinaryForm::dehomogenize() const {
    std::vector<GaussianRational> p(c.rbegin(), c.rend());
    return ExactPoly(std::move(p));
}

ExactBinaryForm operator+(const ExactBinaryForm &a, const ExactBinaryForm &b) {
    if (a.degree != b.degree) {
        throw Error(ErrorCode::DimensionMismatch, "adding binary forms of different degree");
    }
    ExactBinaryForm r = a;
    for (std::size_t k = 0; k < r.c.size(); ++k) {
        r.c[k] += b.c[k];
    }
    return r;
}

ExactBinaryForm operator-(const ExactBinaryForm &a, const ExactBinaryForm &b) {
    return a + (-b);
}

ExactBinaryForm operator*(const ExactBinaryForm &a, const ExactBinaryForm &b) {
    ExactBinaryForm r{a.degree + b.degree, std::vector<GaussianRational>(
                                               static_cast<std::size_t>(a.degree + b.degree + 1))};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

ExactBinaryForm ExactBinaryForm::operator-() const {
    ExactBinaryForm r = *this;
    for (auto &v : r.c) {
        v = -v;
    }
    return r;
}

namespace {

void require_pencil(const ExactState &phi0, const ExactState &phi1) {
    if (phi0.qubits() != 3 || phi1.qubits() != 3) {
        throw Error(ErrorCode::DimensionMismatch, "pencil components must be 3-qubit states");
    }
    if (phi0.is_zero() || phi1.is_zero()) {
        throw Error(ErrorCode::ZeroState, "pencil component is zero");
    }
}

std::array<ExactBinaryForm, 8> symbolic_element(const ExactState &phi0, const ExactState &phi1) {
    std::array<ExactBinaryForm, 8> a;
    for (std::size_t i = 0; i < 8; ++i) {
        a[i] = ExactBinaryForm::linear(phi0[i], phi1[i]);
    }
    return a;
}

ExactState exact_element(const ExactState &phi0, const ExactState &phi1, const GaussianRational &x,
                         const GaussianRational &y) {
    std::vector<GaussianRational> a;
    for (std::size_t i = 0; i < 8; ++i) {
        a.push_back(x * phi0[i] + y * phi1[i]);
    }
    return {3, std::move(a)};
}

TriClass exact_generic_probe(const ExactState &phi0, const ExactState &phi1) {
    const std::array<std::pair<GaussianRational, GaussianRational>, 3> probes = {{
        {GaussianRational(1), GaussianRational(mpq_class(3, 7), mpq_class(2, 5))},
        {GaussianRational(1), GaussianRational(mpq_class(-5, 11), mpq_class(7, 13))},
        {GaussianRational(mpq_class(2, 3), mpq_class(-1, 9)), GaussianRational(1)},
    }};
    std::array<TriClass, 3> t;
    for (std::size_t i = 0; i < 3; ++i) {
        t[i] = classify3(exact_element(phi0, phi1, probes[i].first, probes[i].second));
    }
    if (t[0] == t[1] || t[0] == t[2]) {
        return t[0];
    }
    if (t[1] == t[2]) {
        return t[1];
    }
    throw Error(ErrorCode::GenericTypeUnstable, "exact generic probes disagree");
}

ExactPoly gcd3(const ExactPoly &a, const ExactPoly &b, const ExactPoly &c) {
    return gcd(gcd(a, b), c);
}

// Remove from `r` every root shared with `x` (both squarefree).
ExactPoly remove_roots(const ExactPoly &r, const ExactPoly &x) {
    if (r.is_zero() || x.is_zero()) {
        return r;
    }
    return ExactPoly::divmod(r, gcd(r, x)).first.monic();
}

WideVec wide_high_first(const ExactPoly &p) {
    WideVec out;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        out.push_back(it->to_wide());
    }
    return out;
}

}  // namespace

ExactBinaryForm exact_quartic(const ExactState &phi0, const ExactState &phi1) {
    require_pencil(phi0, phi1);
    return algebra::ghz_polynomial(symbolic_element(phi0, phi1));
}

std::array<ExactBinaryForm, 6> exact_clause_quadratics(const ExactState &phi0,
                                                       const ExactState &phi1) {
    require_pencil(phi0, phi1);
    return algebra::clause_quantities(symbolic_element(phi0, phi1));
}

SpanProfile analyze_span(const ExactState &phi0, const ExactState &phi1) {
    require_pencil(phi0, phi1);
    if (span_dimension(phi0, phi1) != 2) {
        throw Error(ErrorCode::DegenerateSpan, "phi0 and phi1 are linearly dependent");
    }
    ExactBinaryForm quartic_form = exact_quartic(phi0, phi1);
    auto quads = exact_clause_quadratics(phi0, phi1);

    SpanProfile profile;
    profile.exact = true;
    profile.quartic_identically_zero = quartic_form.is_zero();
    profile.generic_type =
        profile.quartic_identically_zero ? exact_generic_probe(phi0, phi1) : TriClass::ghz();
    if (profile.generic_type.kind == TriClass::Kind::Sep000) {
        summarize(profile);
        return profile;
    }

    // Affine chart t = x/y. H[j] cuts out the points where clause j+1 is false.
    ExactPoly u = profile.quartic_identically_zero ? ExactPoly{} : quartic_form.dehomogenize();
    std::array<ExactPoly, 3> h;
    for (std::size_t j = 0; j < 3; ++j) {
        h[j] = gcd3(u, quads[2 * j].dehomogenize(), quads[2 * j + 1].dehomogenize());
    }
    ExactPoly sep = squarefree_part(gcd3(h[0], h[1], h[2]));

    std::vector<std::pair<ExactPoly, TriClass>> categories;
    categories.push_back({sep, TriClass::sep000()});
    for (int k = 1; k <= 3; ++k) {
        if (profile.generic_type == TriClass::bisep(k)) {
            continue;
        }
        std::array<ExactPoly, 2> others;
        std::size_t n = 0;
        for (int j = 1; j <= 3; ++j) {
            if (j != k) {
                others[n++] = h[static_cast<std::size_t>(j - 1)];
            }
        }
        ExactPoly g = gcd(others[0], others[1]);
        if (g.is_zero()) {
            continue;
        }
        categories.push_back({remove_roots(squarefree_part(g), sep), TriClass::bisep(k)});
    }

    // Whatever remains on a clause-false locus has exactly one false clause,
    // which no 3-qubit state can have.
    auto strip = [&](ExactPoly r) {
        for (const auto &[poly, type] : categories) {
            r = remove_roots(r, poly);
        }
        return r;
    };
    if (profile.generic_type.kind == TriClass::Kind::GHZ) {
        ExactPoly w = strip(squarefree_part(u));
        for (const auto &hj : h) {
            if (gcd(w, hj).degree() > 0) {
                throw Error(ErrorCode::AmbiguousClassification,
                            "exact: a point of the line has exactly two true W clauses");
            }
        }
        categories.push_back({w, TriClass::w()});
    } else if (profile.generic_type.kind == TriClass::Kind::W) {
        for (const auto &hj : h) {
            if (!hj.is_zero() && strip(squarefree_part(hj)).degree() > 0) {
                throw Error(ErrorCode::AmbiguousClassification,
                            "exact: a point of the line has exactly two true W clauses");
            }
        }
    }

    std::vector<ExactPoly> layers;
    if (!u.is_zero()) {
        layers = squarefree_decomposition(u);
    }
    for (const auto &[poly, type] : categories) {
        if (poly.degree() < 1) {
            continue;
        }
        std::vector<std::pair<ExactPoly, int>> parts;
        if (layers.empty()) {
            parts.push_back({poly, 1});
        } else {
            for (std::size_t i = 0; i < layers.size(); ++i) {
                ExactPoly g = gcd(poly, layers[i]);
                if (g.degree() > 0) {
                    parts.push_back({g, static_cast<int>(i) + 1});
                }
            }
        }
        for (const auto &[part, mult] : parts) {
            for (const auto &t : poly_roots(wide_high_first(part.monic()))) {
                profile.exceptional.push_back(
                    {ProjectivePoint::make({static_cast<double>(t.real()), static_cast<double>(t.imag())},
                                           1.0, mult),
                     type});
            }
        }
    }

    // The point at infinity is the element phi0 itself.
    TriClass at_infinity = classify3(phi0);
    if (at_infinity != profile.generic_type && at_infinity.kind != TriClass::Kind::GHZ) {
        int mult = u.is_zero() ? 1 : 4 - u.degree();
        profile.exceptional.push_back({ProjectivePoint::infinity(), at_infinity});
        profile.exceptional.back().point.multiplicity = mult;
    }
    summarize(profile);
    return profile;
}

}  // namespace slocc
