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


#include "slocc/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "slocc/error.hpp"

// Deliberately self-contained: the minors and the discriminant below are
// written out here rather than taken from tri.hpp, so a slip in one code path
// shows up as a disagreement instead of being shared.

namespace slocc::oracle {

namespace {

using Amps = std::array<Complex, 8>;
using LComplex = std::complex<long double>;

Amps amps_of(const PureState &state) {
    if (state.qubits() != 3) {
        throw Error(ErrorCode::DimensionMismatch, "oracle expects a 3-qubit state");
    }
    Amps a;
    std::copy(state.amplitudes().begin(), state.amplitudes().end(), a.begin());
    return a;
}

double max_abs(const Amps &a) {
    double m = 0;
    for (const auto &v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// Qubit k (1-based, big-endian) against the other two.
Eigen::Matrix<Complex, 2, 4> reshape(const Amps &a, int k) {
    int bit = 3 - k;
    Eigen::Matrix<Complex, 2, 4> m;
    for (int i = 0; i < 8; ++i) {
        int row = (i >> bit) & 1;
        int col = ((i >> (bit + 1)) << bit) | (i & ((1 << bit) - 1));
        m(row, col) = a[static_cast<std::size_t>(i)];
    }
    return m;
}

double rank_ratio(const Amps &a, int k) {
    Eigen::JacobiSVD<Eigen::Matrix<Complex, 2, 4>> svd(reshape(a, k));
    auto s = svd.singularValues();
    return s(0) > 0 ? s(1) / s(0) : 0.0;
}

// The six 2x2 minors of reshape k; all vanish iff qubit k factors out.
std::array<Complex, 6> minors(const Amps &a, int k) {
    auto m = reshape(a, k);
    std::array<Complex, 6> out;
    std::size_t n = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            out[n++] = m(0, i) * m(1, j) - m(0, j) * m(1, i);
        }
    }
    return out;
}

double norm2(const Amps &a) {
    double s = 0;
    for (const auto &v : a) {
        s += std::norm(v);
    }
    return s;
}

double minor_residual(const Amps &a, int k) {
    double best = 0;
    for (const auto &v : minors(a, k)) {
        best = std::max(best, std::abs(v));
    }
    double n = norm2(a);
    return n > 0 ? best / n : 0.0;
}

// det(x M0 + y M1) for the slices at qubit 1 = 0, 1 is c0 x^2 + c1 xy + c2 y^2;
// its discriminant is the degree-4 invariant. Returns the discriminant.
LComplex discriminant(const Amps &a) {
    std::array<LComplex, 8> w;
    for (std::size_t i = 0; i < 8; ++i) {
        w[i] = {a[i].real(), a[i].imag()};
    }
    LComplex c0 = w[0] * w[3] - w[1] * w[2];
    LComplex c2 = w[4] * w[7] - w[5] * w[6];
    LComplex c1 = w[0] * w[7] + w[3] * w[4] - w[1] * w[6] - w[2] * w[5];
    return c1 * c1 - 4.0L * c0 * c2;
}

// Chordal distance between the two roots of that quadratic. Only the qubit-1
// operator of a SLOCC map moves them (by a Moebius map); the other two
// multiply the form by determinants.
double root_separation(const Amps &a) {
    std::array<LComplex, 8> w;
    for (std::size_t i = 0; i < 8; ++i) {
        w[i] = {a[i].real(), a[i].imag()};
    }
    LComplex c0 = w[0] * w[3] - w[1] * w[2];
    LComplex c2 = w[4] * w[7] - w[5] * w[6];
    LComplex c1 = w[0] * w[7] + w[3] * w[4] - w[1] * w[6] - w[2] * w[5];
    long double d = std::abs(c1 * c1 - 4.0L * c0 * c2);
    long double den = std::norm(c0) + std::norm(c2) + (std::norm(c1) + d) / 2;
    return den > 0 ? static_cast<double>(std::sqrt(d / den)) : 0.0;
}

double chordal(Complex x1, Complex y1, Complex x2, Complex y2) {
    double n = std::sqrt((std::norm(x1) + std::norm(y1)) * (std::norm(x2) + std::norm(y2)));
    return n > 0 ? std::abs(x1 * y2 - x2 * y1) / n : 0.0;
}

struct Basis {
    Amps u0, u1;
    Eigen::Matrix2cd r_inv;  // maps basis coordinates to caller coordinates
};

Basis orthonormal_basis(const PureState &phi0, const PureState &phi1, double eps) {
    Eigen::Matrix<Complex, 8, 2> m;
    for (int i = 0; i < 8; ++i) {
        m(i, 0) = phi0[static_cast<std::size_t>(i)];
        m(i, 1) = phi1[static_cast<std::size_t>(i)];
    }
    if (m.col(0).norm() == 0 || m.col(1).norm() == 0) {
        throw Error(ErrorCode::ZeroState, "pencil spanned by a zero vector");
    }
    Eigen::HouseholderQR<Eigen::Matrix<Complex, 8, 2>> qr(m);
    Eigen::Matrix<Complex, 8, 2> q = qr.householderQ() * Eigen::Matrix<Complex, 8, 2>::Identity();
    Eigen::Matrix2cd r = qr.matrixQR().topRows<2>().triangularView<Eigen::Upper>();
    if (std::abs(r(1, 1)) <= eps * std::abs(r(0, 0))) {
        throw Error(ErrorCode::DegenerateSpan, "phi0 and phi1 are linearly dependent");
    }
    Basis b;
    for (int i = 0; i < 8; ++i) {
        b.u0[static_cast<std::size_t>(i)] = q(i, 0);
        b.u1[static_cast<std::size_t>(i)] = q(i, 1);
    }
    b.r_inv = r.inverse();
    return b;
}

Amps element(const Basis &b, Complex x, Complex y) {
    Amps a;
    for (std::size_t i = 0; i < 8; ++i) {
        a[i] = x * b.u0[i] + y * b.u1[i];
    }
    return a;
}

// Zero-seeking measure: minors of reshape k (k = 1..3) or the discriminant
// (k = 0), as analytic functions of the chart coordinate.
std::vector<Complex> residual(const Amps &a, int k) {
    if (k == 0) {
        LComplex d = discriminant(a);
        return {Complex(static_cast<double>(d.real()), static_cast<double>(d.imag()))};
    }
    auto m = minors(a, k);
    return {m.begin(), m.end()};
}

double relative_residual(const Amps &a, int k) {
    if (k == 0) {
        double n = norm2(a);
        return n > 0 ? static_cast<double>(std::abs(discriminant(a))) / (n * n) : 0.0;
    }
    return minor_residual(a, k);
}

struct Refined {
    Complex x, y;
    double value;
};

// Gauss-Newton in the affine chart (1:s) or (s:1), whichever contains the
// seed with |s| <= 1.
Refined refine(const Basis &b, Complex x, Complex y, int k) {
    bool x_chart = std::abs(x) >= std::abs(y);
    Complex s = x_chart ? y / x : x / y;
    auto at = [&](Complex t) { return x_chart ? element(b, 1.0, t) : element(b, t, 1.0); };
    for (int it = 0; it < 200; ++it) {
        auto r = residual(at(s), k);
        double h = 1e-5 * (1 + std::abs(s));
        auto rp = residual(at(s + h), k);
        auto rm = residual(at(s - h), k);
        Complex num = 0;
        double den = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            Complex j = (rp[i] - rm[i]) / (2 * h);
            num += std::conj(j) * r[i];
            den += std::norm(j);
        }
        if (den == 0) {
            break;
        }
        Complex step = num / den;
        s -= step;
        if (std::abs(step) < 1e-16 * (1 + std::abs(s))) {
            break;
        }
    }
    Complex rx = x_chart ? Complex(1.0) : s;
    Complex ry = x_chart ? s : Complex(1.0);
    return {rx, ry, relative_residual(at(s), k)};
}

// Neighbour lists of the Fibonacci points, which depend on the count only.
const std::vector<std::vector<std::size_t>> &neighbours(const std::vector<ProjectivePoint> &points) {
    static std::mutex lock;
    static std::map<std::size_t, std::vector<std::vector<std::size_t>>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto [it, fresh] = cache.try_emplace(points.size());
    if (fresh) {
        double reach = 1.5 * std::sqrt(std::numbers::pi / static_cast<double>(points.size()));
        auto &near = it->second;
        near.resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                if (chordal(points[i].x, points[i].y, points[j].x, points[j].y) < reach) {
                    near[i].push_back(j);
                    near[j].push_back(i);
                }
            }
        }
    }
    return it->second;
}

}  // namespace

TriClass classify3_by_ranks(const PureState &state, double eps) {
    Amps a = amps_of(state);
    if (max_abs(a) == 0) {
        throw Error(ErrorCode::ZeroState, "zero state");
    }
    std::array<bool, 3> full{};
    int deficient = 0;
    for (int k = 1; k <= 3; ++k) {
        full[static_cast<std::size_t>(k - 1)] = rank_ratio(a, k) > eps;
        deficient += full[static_cast<std::size_t>(k - 1)] ? 0 : 1;
    }
    if (deficient >= 2) {
        return TriClass::sep000();
    }
    if (deficient == 1) {
        return TriClass::bisep(static_cast<int>(std::find(full.begin(), full.end(), false) - full.begin()) + 1);
    }
    return root_separation(a) > std::sqrt(eps) ? TriClass::ghz() : TriClass::w();
}

std::vector<ProjectivePoint> sphere_points(int count) {
    std::vector<ProjectivePoint> out;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / count;
        double theta = std::acos(z);
        ProjectivePoint p;
        p.x = std::cos(theta / 2);
        p.y = std::polar(std::sin(theta / 2), golden * i);
        out.push_back(p);
    }
    return out;
}

SpanProfile profile_by_sampling(const PureState &phi0, const PureState &phi1, int samples, double eps) {
    if (samples < 1) {
        throw Error(ErrorCode::ConstraintViolation, "samples must be positive");
    }
    amps_of(phi0);
    amps_of(phi1);
    Basis basis = orthonormal_basis(phi0, phi1, eps);
    auto points = sphere_points(samples);

    // Generic type: the most frequent verdict.
    std::vector<Amps> elems;
    std::map<std::pair<int, int>, int> votes;
    for (const auto &p : points) {
        elems.push_back(element(basis, p.x, p.y));
        TriClass t = classify3_by_ranks(PureState(3, {elems.back().begin(), elems.back().end()}), eps);
        ++votes[{static_cast<int>(t.kind), t.cut}];
    }
    auto top = std::max_element(votes.begin(), votes.end(),
                                [](const auto &a, const auto &b) { return a.second < b.second; });
    SpanProfile profile;
    profile.generic_type = {static_cast<TriClass::Kind>(top->first.first), top->first.second};

    // Seeds: samples at which a measure is locally minimal among their
    // immediate neighbours (the Fibonacci spacing is about sqrt(pi/n)), plus
    // the lowest samples outright; refinement is cheap next to sampling.
    const auto &near = neighbours(points);
    std::vector<int> measures = {1, 2, 3};
    if (profile.generic_type.kind == TriClass::Kind::GHZ) {
        measures.push_back(0);
    }
    std::vector<Refined> zeros;
    for (int k : measures) {
        std::vector<double> value(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            value[i] = relative_residual(elems[i], k);
        }
        std::vector<std::pair<double, std::size_t>> minima;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (std::all_of(near[i].begin(), near[i].end(), [&](std::size_t j) { return value[i] <= value[j]; })) {
                minima.push_back({value[i], i});
            }
        }
        std::sort(minima.begin(), minima.end());
        std::vector<std::size_t> seeds;
        for (std::size_t m = 0; m < minima.size() && m < 16; ++m) {
            seeds.push_back(minima[m].second);
        }
        std::vector<std::size_t> order(elems.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::size_t lowest = std::min<std::size_t>(32, order.size());
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(lowest), order.end(),
                          [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
        seeds.insert(seeds.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(lowest));
        for (std::size_t i : seeds) {
            Refined r = refine(basis, points[i].x, points[i].y, k);
            if (r.value <= 1e-11) {
                zeros.push_back(r);
            }
        }
    }

    // Type each zero by which measures vanish there, then merge: any two
    // zeros within 1e-6, and same-type zeros within 1e-4 (a double zero
    // converges only to about the square root of the noise).
    std::vector<ExceptionalPoint> typed;
    for (const auto &z : zeros) {
        Amps a = element(basis, z.x, z.y);
        std::vector<int> cuts;
        for (int k = 1; k <= 3; ++k) {
            if (minor_residual(a, k) <= 1e-8) {
                cuts.push_back(k);
            }
        }
        TriClass t = cuts.size() >= 2   ? TriClass::sep000()
                     : cuts.size() == 1 ? TriClass::bisep(cuts.front())
                     : relative_residual(a, 0) <= 1e-10 ? TriClass::w()
                                                        : TriClass::ghz();
        ProjectivePoint p;
        p.x = z.x;
        p.y = z.y;
        auto same = std::find_if(typed.begin(), typed.end(), [&](const ExceptionalPoint &d) {
            double dist = chordal(d.point.x, d.point.y, p.x, p.y);
            return dist < 1e-6 || (d.type == t && dist < 1e-4);
        });
        if (same == typed.end()) {
            typed.push_back({p, t});
        } else if (t < same->type) {
            same->type = t;
        }
    }
    for (const auto &e : typed) {
        if (e.type.kind == TriClass::Kind::GHZ || e.type == profile.generic_type) {
            continue;
        }
        Eigen::Vector2cd xy = basis.r_inv * Eigen::Vector2cd(e.point.x, e.point.y);
        double n = xy.norm();
        ProjectivePoint p;
        p.x = xy(0) / n;
        p.y = xy(1) / n;
        profile.exceptional.push_back({p, e.type});
    }

    profile.quartic_identically_zero = profile.generic_type.kind != TriClass::Kind::GHZ;
    profile.ghz_generic = !profile.quartic_identically_zero;
    for (const auto &e : profile.exceptional) {
        if (e.type.kind == TriClass::Kind::Sep000) {
            profile.contains_000 = true;
        } else if (e.type.kind == TriClass::Kind::Bisep) {
            profile.bisep_cuts.push_back(e.type.cut);
        } else if (e.type.kind == TriClass::Kind::W) {
            ++profile.w_points;
        }
    }
    std::sort(profile.bisep_cuts.begin(), profile.bisep_cuts.end());
    return profile;
}

}  // namespace slocc::oracle
