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


#include "slocc/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "slocc/error.hpp"

namespace slocc {

namespace {

std::size_t insert_bit(std::size_t j, unsigned bit, std::size_t value) {
    std::size_t low = j & ((std::size_t{1} << bit) - 1);
    std::size_t high = j >> bit;
    return (high << (bit + 1)) | (value << bit) | low;
}

long double to_long_double(const mpq_class &q) {
    double hi = q.get_d();
    mpq_class rest = q - mpq_class(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        throw Error(ErrorCode::ParseError, "malformed number '" + std::string(whole) + "'");
    }
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw Error(ErrorCode::ParseError, "malformed number '" + std::string(whole) + "'");
        }
    }
    return mpz_class(std::string(digits), 10);
}

mpz_class pow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

mpq_class parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view ex = s.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) {
            eneg = ex[0] == '-';
            ex.remove_prefix(1);
        }
        mpz_class ev = parse_integer(ex, text);
        if (!ev.fits_slong_p() || abs(ev) > 100000) {
            throw Error(ErrorCode::ParseError, "exponent out of range in '" + std::string(text) + "'");
        }
        exponent = eneg ? -ev.get_si() : ev.get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) {
            throw Error(ErrorCode::ParseError, "malformed number '" + std::string(text) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        digits = std::string(s);
    }
    mpq_class v(parse_integer(digits, text));
    if (exponent >= 0) {
        v *= pow10(exponent);
    } else {
        v /= pow10(-exponent);
    }
    v.canonicalize();
    return negative ? mpq_class(-v) : v;
}

}  // namespace

GaussianRational GaussianRational::from_double(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw Error(ErrorCode::ParseError, "non-finite value has no rational form");
    }
    return {mpq_class(re), mpq_class(im)};
}

mpq_class GaussianRational::parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
            negative = num[0] == '-';
            num.remove_prefix(1);
        }
        mpz_class d = parse_integer(den, text);
        if (d == 0) {
            throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        }
        mpq_class q(parse_integer(num, text), d);
        q.canonicalize();
        return negative ? mpq_class(-q) : q;
    }
    return parse_decimal(text);
}

Complex GaussianRational::to_complex() const {
    return {re_.get_d(), im_.get_d()};
}

WideComplex GaussianRational::to_wide() const {
    return {to_long_double(re_), to_long_double(im_)};
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) {
        return re_.get_str();
    }
    std::string s = sgn(re_) == 0 ? "" : re_.get_str();
    if (sgn(im_) > 0 && !s.empty()) {
        s += '+';
    }
    return s + im_.get_str() + "i";
}

GaussianRational operator/(const GaussianRational &a, const GaussianRational &b) {
    mpq_class d = b.norm();
    if (sgn(d) == 0) {
        throw Error(ErrorCode::ZeroState, "division by zero in Q(i)");
    }
    GaussianRational n = a * b.conj();
    return {n.re_ / d, n.im_ / d};
}

ExactState::ExactState(int qubits, std::vector<GaussianRational> amps)
    : qubits_(qubits), amps_(std::move(amps)) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw Error(ErrorCode::DimensionMismatch, "qubit count outside 1..4");
    }
    if (amps_.size() != (std::size_t{1} << qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude count is not 2^n");
    }
}

ExactState ExactState::from_numeric(const PureState &state) {
    std::vector<GaussianRational> amps;
    amps.reserve(state.dim());
    for (auto a : state.amplitudes()) {
        amps.push_back(GaussianRational::from_double(a.real(), a.imag()));
    }
    return {state.qubits(), std::move(amps)};
}

bool ExactState::is_zero() const {
    for (const auto &a : amps_) {
        if (!a.is_zero()) {
            return false;
        }
    }
    return true;
}

PureState ExactState::to_numeric() const {
    std::vector<Complex> amps;
    amps.reserve(amps_.size());
    for (const auto &a : amps_) {
        amps.push_back(a.to_complex());
    }
    return {qubits_, std::move(amps)};
}

ExactDecomposition decompose(const ExactState &state, int distinguished) {
    int n = state.qubits();
    if (n < 2 || distinguished < 1 || distinguished > n) {
        throw Error(ErrorCode::DimensionMismatch, "bad distinguished qubit");
    }
    unsigned bit = qubit_bit(n, distinguished);
    std::size_t half = state.dim() / 2;
    std::vector<GaussianRational> a0(half), a1(half);
    for (std::size_t j = 0; j < half; ++j) {
        a0[j] = state[insert_bit(j, bit, 0)];
        a1[j] = state[insert_bit(j, bit, 1)];
    }
    return {ExactState(n - 1, std::move(a0)), ExactState(n - 1, std::move(a1)), distinguished};
}

int exact_rank(std::vector<std::vector<GaussianRational>> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        auto r0 = static_cast<std::size_t>(rank);
        std::size_t pivot = r0;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r0], rows[pivot]);
        for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) {
                continue;
            }
            GaussianRational f = rows[r][c] / rows[r0][c];
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] -= f * rows[r0][k];
            }
        }
        ++rank;
    }
    return rank;
}

int span_dimension(const ExactState &phi0, const ExactState &phi1) {
    if (phi0.dim() != phi1.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "phi0 and phi1 sizes differ");
    }
    int r = exact_rank({phi0.amplitudes(), phi1.amplitudes()});
    if (r == 0) {
        throw Error(ErrorCode::ZeroState, "both components vanish");
    }
    return r;
}

std::map<Bipartition, int> bipartition_ranks(const ExactState &state) {
    if (state.is_zero()) {
        throw Error(ErrorCode::ZeroState, "rank of the zero state");
    }
    int n = state.qubits();
    std::vector<Bipartition> cuts;
    if (n == 4) {
        cuts = all_bipartitions4();
    } else {
        for (unsigned m = 1; m < (1u << n) - 1; m += 2) {
            cuts.push_back({m, n});
        }
    }
    std::map<Bipartition, int> out;
    for (const auto &cut : cuts) {
        auto left = cut.left();
        auto right = cut.right();
        std::vector<std::vector<GaussianRational>> m(
            std::size_t{1} << left.size(), std::vector<GaussianRational>(std::size_t{1} << right.size()));
        for (std::size_t i = 0; i < state.dim(); ++i) {
            std::size_t r = 0, c = 0;
            for (int k : left) {
                r = (r << 1) | ((i >> qubit_bit(n, k)) & 1);
            }
            for (int k : right) {
                c = (c << 1) | ((i >> qubit_bit(n, k)) & 1);
            }
            m[r][c] = state[i];
        }
        out[cut] = exact_rank(std::move(m));
    }
    return out;
}

ExactState factor_out_qubit(const ExactState &state, int qubit) {
    auto d = decompose(state, qubit);
    return d.phi0.is_zero() ? d.phi1 : d.phi0;
}

ExactPoly::ExactPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void ExactPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

ExactPoly ExactPoly::derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
    }
    return ExactPoly(std::move(d));
}

ExactPoly ExactPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    std::vector<GaussianRational> m;
    for (const auto &v : c_) {
        m.push_back(v / leading());
    }
    return ExactPoly(std::move(m));
}

GaussianRational ExactPoly::evaluate(const GaussianRational &t) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

ExactPoly operator*(const ExactPoly &a, const ExactPoly &b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return ExactPoly(std::move(out));
}

std::pair<ExactPoly, ExactPoly> ExactPoly::divmod(const ExactPoly &a, const ExactPoly &b) {
    if (b.is_zero()) {
        throw Error(ErrorCode::ZeroState, "polynomial division by zero");
    }
    std::vector<GaussianRational> rem = a.c_;
    int db = b.degree();
    std::vector<GaussianRational> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
    for (int k = a.degree() - db; k >= 0; --k) {
        GaussianRational f = rem[static_cast<std::size_t>(k + db)] / b.leading();
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

ExactPoly gcd(const ExactPoly &a, const ExactPoly &b) {
    ExactPoly x = a, y = b;
    while (!y.is_zero()) {
        ExactPoly r = ExactPoly::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExactPoly squarefree_part(const ExactPoly &p) {
    if (p.degree() < 1) {
        return p.monic();
    }
    return ExactPoly::divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<ExactPoly> squarefree_decomposition(const ExactPoly &p) {
    std::vector<ExactPoly> out;
    if (p.degree() < 1) {
        return out;
    }
    // c - b'
    auto minus_derivative = [](const ExactPoly &c, const ExactPoly &b) {
        auto bd = b.derivative().coeffs();
        auto cc = c.coeffs();
        cc.resize(std::max(cc.size(), bd.size()));
        for (std::size_t k = 0; k < bd.size(); ++k) {
            cc[k] -= bd[k];
        }
        return ExactPoly(std::move(cc));
    };
    ExactPoly a0 = gcd(p, p.derivative());
    ExactPoly b = ExactPoly::divmod(p, a0).first;
    ExactPoly d = minus_derivative(ExactPoly::divmod(p.derivative(), a0).first, b);
    while (b.degree() >= 1) {
        ExactPoly a = gcd(b, d);
        out.push_back(a);
        b = ExactPoly::divmod(b, a).first;
        d = minus_derivative(ExactPoly::divmod(d, a).first, b);
    }
    return out;
}

}  // namespace slocc
