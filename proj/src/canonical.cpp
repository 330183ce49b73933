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


#include "slocc/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "slocc/error.hpp"

namespace slocc {

namespace {

PureState from_indices(int qubits, std::initializer_list<std::pair<std::size_t, Complex>> terms) {
    std::vector<Complex> amps(std::size_t{1} << qubits);
    for (const auto &[i, v] : terms) {
        amps.at(i) += v;
    }
    return {qubits, std::move(amps)};
}

PureState ones(int qubits, std::initializer_list<std::size_t> indices) {
    std::vector<Complex> amps(std::size_t{1} << qubits);
    for (auto i : indices) {
        amps.at(i) = 1.0;
    }
    return {qubits, std::move(amps)};
}

// Exchanges qubits p and q (1-based).
PureState swap_qubits(const PureState &s, int p, int q) {
    if (p == q) {
        return s;
    }
    int n = s.qubits();
    unsigned bp = qubit_bit(n, p), bq = qubit_bit(n, q);
    std::vector<Complex> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t vp = (i >> bp) & 1, vq = (i >> bq) & 1;
        std::size_t j = i & ~((std::size_t{1} << bp) | (std::size_t{1} << bq));
        j |= (vp << bq) | (vq << bp);
        out[j] = s[i];
    }
    return {n, std::move(out)};
}

PureState join(const PureState &phi0, const PureState &phi1) {
    return recompose({phi0, phi1, 1});
}

PureState w3() {
    return ones(3, {1, 2, 4});
}

void check_cut(int cut) {
    if (cut < 1 || cut > 3) {
        throw Error(ErrorCode::ConstraintViolation, "cut must be 1, 2 or 3");
    }
}

bool negligible(Complex v, double scale) {
    return std::abs(v) <= 1e-12 * scale;
}

PureState ww_family(const FamilySpec &spec) {
    Complex mu = spec.param("mu", 0.0);
    Complex a3 = spec.param("a3", 1.0);
    Complex a5 = spec.param("a5", 1.0);
    if (spec.sign != 1 && spec.sign != -1) {
        throw Error(ErrorCode::ConstraintViolation, "sign must be +1 or -1");
    }
    double s = spec.sign;
    if (a3 == Complex{}) {
        throw Error(ErrorCode::ConstraintViolation, "a3 != 0");
    }
    if (a5 == Complex{}) {
        throw Error(ErrorCode::ConstraintViolation, "a5 != 0");
    }
    Complex r = principal_sqrt(a3 * a5);
    double scale = std::abs(a3) + std::abs(a5);
    Complex a6 = a3 + a5 + 2.0 * s * r;
    if (negligible(a6, scale)) {
        throw Error(ErrorCode::ConstraintViolation,
                    std::string("a3 + a5 ") + (s > 0 ? "+" : "-") + " 2 sqrt(a3 a5) != 0");
    }
    Complex den = a3 * (a5 + s * r);
    if (negligible(den, scale * scale)) {
        throw Error(ErrorCode::ConstraintViolation,
                    std::string("a3 (a5 ") + (s > 0 ? "+" : "-") + " sqrt(a3 a5)) != 0");
    }
    Complex a4 = mu * a5 * (a3 + s * r) / den;
    PureState phi0 = from_indices(
        3, {{0, -mu * mu / (4.0 * a3)}, {2, -mu}, {3, a3}, {4, a4}, {5, a5}, {6, a6}});
    return join(phi0, w3());
}

PureState lambda_family(const FamilySpec &spec) {
    Complex l = spec.param("lambda", 0.0);
    PureState phi0 = from_indices(3, {{0, -l * l}, {1, l}, {2, l}, {4, -l}, {5, 1.0}, {6, 1.0}});
    return join(phi0, w3());
}

PureState sep_line(const FamilySpec &spec) {
    Complex p0 = spec.param("p0", 1.0);
    Complex s00 = spec.param("psi00", 1.0);
    Complex s01 = spec.param("psi01", 1.0);
    Complex s10 = spec.param("psi10", 2.0);
    if (p0 == Complex{}) {
        throw Error(ErrorCode::ConstraintViolation, "p0 != 0");
    }
    if (s01 * s10 == Complex{}) {
        throw Error(ErrorCode::ConstraintViolation, "psi01 psi10 != 0");
    }
    PureState phi0 = from_indices(3, {{0, p0 * s00}, {1, p0 * s01}, {2, p0 * s10}});
    return join(phi0, w3());
}

// Moves the biseparable qubit of a cut-1 representative (3-qubit position 1,
// absolute qubit 2) to position `cut`.
PureState with_cut(const PureState &s, int cut) {
    check_cut(cut);
    return swap_qubits(s, 2, cut + 1);
}

const std::set<std::string> &known_params() {
    static const std::set<std::string> names = {"lambda", "mu", "a3", "a5", "p0", "psi00", "psi01", "psi10"};
    return names;
}

}  // namespace

Complex FamilySpec::param(const std::string &name, Complex fallback) const {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

Complex principal_sqrt(Complex z) {
    // std::sqrt follows the branch cut convention of C99 csqrt: Re >= 0, and
    // on the negative real axis the sign of the imaginary zero decides.
    if (z.imag() == 0.0 && z.real() < 0) {
        return {0.0, std::sqrt(-z.real())};
    }
    return std::sqrt(z);
}

std::vector<std::string> family_names() {
    return {"W000_000", "W000_0Psi", "W000_GHZ", "W000_W",  "W0kPsi_0kPsi", "W0iPsi_0jPsi",
            "W0Psi_GHZ", "W0kPsi_W", "WGHZ_W",  "WW_W",    "SepLine",      "GHZ",
            "W",         "Sep000",   "Bisep"};
}

PureState make_canonical(const FamilySpec &spec) {
    for (const auto &[name, value] : spec.params) {
        if (!known_params().contains(name)) {
            throw Error(ErrorCode::ParseError, "unknown parameter '" + name + "'");
        }
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw Error(ErrorCode::ConstraintViolation, "parameter '" + name + "' must be finite");
        }
    }
    const std::string &f = spec.family;
    if (f == "GHZ") {
        return ones(3, {0, 7});
    }
    if (f == "W") {
        return w3();
    }
    if (f == "Sep000") {
        return ones(3, {0});
    }
    if (f == "Bisep") {
        check_cut(spec.cut);
        return swap_qubits(ones(3, {0, 3}), 1, spec.cut);
    }
    if (f == "W000_000") {
        return ones(4, {0, 15});
    }
    if (f == "W000_0Psi") {
        return ones(4, {0, 13, 14});
    }
    if (f == "W000_GHZ") {
        return ones(4, {0, 9, 10, 12, 15});
    }
    if (f == "W000_W") {
        return ones(4, {0, 9, 10, 12});
    }
    if (f == "W0kPsi_0kPsi") {
        return with_cut(ones(4, {0, 3, 13, 14}), spec.cut);
    }
    if (f == "W0iPsi_0jPsi") {
        return ones(4, {0, 3, 10, 15});
    }
    if (f == "W0Psi_GHZ") {
        return with_cut(ones(4, {0, 3, 10, 13, 14}), spec.cut);
    }
    if (f == "W0kPsi_W") {
        return with_cut(lambda_family(spec), spec.cut);
    }
    if (f == "WGHZ_W") {
        return join(w3(), ones(3, {0, 7}));
    }
    if (f == "WW_W") {
        return ww_family(spec);
    }
    if (f == "SepLine") {
        return sep_line(spec);
    }
    throw Error(ErrorCode::ParseError, "unknown family '" + f + "'");
}

std::vector<Fixture> quad_fixtures() {
    auto fam = [](const std::string &name) { return make_canonical({name, {}}); };
    return {
        {"W000_000", fam("W000_000"), QuadTag::W000_000, {}},
        {"W000_0Psi", fam("W000_0Psi"), QuadTag::W000_0Psi, {}},
        {"W000_GHZ", fam("W000_GHZ"), QuadTag::W000_GHZ, {}},
        {"W000_W", fam("W000_W"), QuadTag::W000_W, {}},
        {"W0kPsi_0kPsi", fam("W0kPsi_0kPsi"), QuadTag::W0kPsi_0kPsi, {1}},
        {"W0iPsi_0jPsi", fam("W0iPsi_0jPsi"), QuadTag::W0iPsi_0jPsi, {1, 2}},
        {"W0Psi_GHZ", fam("W0Psi_GHZ"), QuadTag::W0Psi_GHZ, {1}},
        {"W0kPsi_W", fam("W0kPsi_W"), QuadTag::W0kPsi_W, {1}},
        {"WGHZ_W", fam("WGHZ_W"), QuadTag::WGHZ_W, {}},
        {"WW_W", fam("WW_W"), QuadTag::WW_W, {}},
        // Bisep points at (1:0), x = -1/psi01 and x = -1/psi10 with cuts 1, 3, 2.
        {"SepLine", fam("SepLine"), QuadTag::W0iPsi_0jPsi, {1, 2}},
    };
}

std::vector<std::pair<PureState, TriClass>> tri_fixtures() {
    std::vector<std::pair<PureState, TriClass>> out = {
        {make_canonical({"GHZ", {}}), TriClass::ghz()},
        {make_canonical({"W", {}}), TriClass::w()},
        {make_canonical({"Sep000", {}}), TriClass::sep000()},
    };
    for (int k = 1; k <= 3; ++k) {
        out.push_back({make_canonical({"Bisep", {}, 1, k}), TriClass::bisep(k)});
    }
    return out;
}

LocalOperator random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Complex a(g(rng), g(rng)), b(g(rng), g(rng)), c(g(rng), g(rng)), d(g(rng), g(rng));
    // Gram-Schmidt on the columns (a, b), (c, d): QR with positive diagonal.
    double n1 = std::hypot(std::abs(a), std::abs(b));
    a /= n1;
    b /= n1;
    Complex proj = std::conj(a) * c + std::conj(b) * d;
    c -= proj * a;
    d -= proj * b;
    double n2 = std::hypot(std::abs(c), std::abs(d));
    c /= n2;
    d /= n2;
    return {a, c, b, d};
}

LocalOperator random_local_operator(double max_condition, std::mt19937_64 &rng) {
    if (!(max_condition >= 1)) {
        throw Error(ErrorCode::ConstraintViolation, "max_condition must be >= 1");
    }
    double half = 0.5 * std::log(max_condition);
    std::uniform_real_distribution<double> u(-half, half);
    LocalOperator left = random_unitary(rng);
    LocalOperator right = random_unitary(rng);
    double s1 = std::exp(u(rng));
    double s2 = std::exp(u(rng));
    return left * LocalOperator::diag(s1, s2) * right;
}

SloccOp random_slocc(int qubits, double max_condition, std::mt19937_64 &rng) {
    std::vector<LocalOperator> ops;
    for (int k = 0; k < qubits; ++k) {
        ops.push_back(random_local_operator(max_condition, rng));
    }
    return SloccOp(std::move(ops));
}

SloccOp random_slocc(int qubits, double max_condition, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_slocc(qubits, max_condition, rng);
}

PureState random_state(int qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << qubits);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    return {qubits, std::move(amps)};
}

}  // namespace slocc
