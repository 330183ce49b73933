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

#include "slocc/qstate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "slocc/error.hpp"
#include "slocc/kernels.hpp"

namespace slocc {

namespace {

void check_qubits(int qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw Error(ErrorCode::DimensionMismatch,
                    "qubit count " + std::to_string(qubits) + " outside 1.." +
                        std::to_string(kMaxQubits));
    }
}

void check_qubit_index(int qubits, int qubit) {
    if (qubit < 1 || qubit > qubits) {
        throw Error(ErrorCode::DimensionMismatch, "qubit index " + std::to_string(qubit) +
                                                      " outside 1.." + std::to_string(qubits));
    }
}

// Index with a bit inserted at position `bit`.
std::size_t insert_bit(std::size_t j, unsigned bit, std::size_t value) {
    std::size_t low = j & ((std::size_t{1} << bit) - 1);
    std::size_t high = j >> bit;
    return (high << (bit + 1)) | (value << bit) | low;
}

std::vector<double> singular_values(const Eigen::MatrixXcd &m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

}  // namespace

PureState::PureState(int qubits, std::vector<Complex> amps) : qubits_(qubits), amps_(std::move(amps)) {
    check_qubits(qubits);
    if (amps_.size() != (std::size_t{1} << qubits)) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(amps_.size()) + " amplitudes for " + std::to_string(qubits) +
                        " qubits");
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::DimensionMismatch, "non-finite amplitude");
        }
    }
}

PureState PureState::basis(int qubits, std::size_t index) {
    check_qubits(qubits);
    std::vector<Complex> amps(std::size_t{1} << qubits);
    amps.at(index) = 1.0;
    return {qubits, std::move(amps)};
}

double PureState::max_abs() const noexcept {
    double m = 0;
    for (const auto &a : amps_) {
        m = std::max(m, std::abs(a));
    }
    return m;
}

double PureState::norm() const noexcept {
    // Scale first so tiny and huge states do not under/overflow.
    double m = max_abs();
    if (m == 0) {
        return 0;
    }
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a / m);
    }
    return m * std::sqrt(s);
}

bool PureState::is_zero() const noexcept {
    return std::all_of(amps_.begin(), amps_.end(), [](Complex a) { return a == Complex{}; });
}

PureState PureState::scaled(Complex factor) const {
    std::vector<Complex> out(amps_);
    for (auto &a : out) {
        a *= factor;
    }
    return {qubits_, std::move(out)};
}

PureState operator+(const PureState &a, const PureState &b) {
    if (a.qubits_ != b.qubits_) {
        throw Error(ErrorCode::DimensionMismatch, "adding states of different qubit counts");
    }
    std::vector<Complex> out(a.amps_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b.amps_[i];
    }
    return {a.qubits_, std::move(out)};
}

PureState tensor(const PureState &a, const PureState &b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (auto x : a.amplitudes()) {
        for (auto y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return {a.qubits() + b.qubits(), std::move(out)};
}

LocalOperator::LocalOperator(Complex m00, Complex m01, Complex m10, Complex m11)
    : m_{m00, m01, m10, m11} {
}

Complex LocalOperator::det() const noexcept {
    return m_[0] * m_[3] - m_[1] * m_[2];
}

LocalOperator LocalOperator::inverse() const {
    Complex d = det();
    if (std::abs(d) < kSingularFloor) {
        throw Error(ErrorCode::SingularOperator, "local operator has |det| below floor");
    }
    return {m_[3] / d, -m_[1] / d, -m_[2] / d, m_[0] / d};
}

std::array<double, 2> LocalOperator::singular_values() const noexcept {
    // The closed form through the Frobenius norm and |det| loses half the
    // digits when the two values are close; the Jacobi SVD does not.
    Eigen::Matrix2cd a;
    a << m_[0], m_[1], m_[2], m_[3];
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(a);
    return {svd.singularValues()(0), svd.singularValues()(1)};
}

double LocalOperator::condition_number() const noexcept {
    auto s = singular_values();
    return s[1] > 0 ? s[0] / s[1] : std::numeric_limits<double>::infinity();
}

LocalOperator LocalOperator::operator*(const LocalOperator &r) const {
    const auto &l = m_;
    const auto &q = r.m_;
    return {l[0] * q[0] + l[1] * q[2], l[0] * q[1] + l[1] * q[3], l[2] * q[0] + l[3] * q[2],
            l[2] * q[1] + l[3] * q[3]};
}

SloccOp::SloccOp(std::vector<LocalOperator> ops) : ops_(std::move(ops)) {
    check_qubits(static_cast<int>(ops_.size()));
    for (const auto &op : ops_) {
        if (std::abs(op.det()) < kSingularFloor) {
            throw Error(ErrorCode::SingularOperator, "SLOCC operator must be invertible");
        }
    }
}

SloccOp SloccOp::identity(int qubits) {
    check_qubits(qubits);
    return SloccOp(std::vector<LocalOperator>(static_cast<std::size_t>(qubits),
                                              LocalOperator::identity()));
}

SloccOp SloccOp::single(int qubits, int qubit, const LocalOperator &op) {
    check_qubits(qubits);
    check_qubit_index(qubits, qubit);
    std::vector<LocalOperator> ops(static_cast<std::size_t>(qubits), LocalOperator::identity());
    ops[static_cast<std::size_t>(qubit - 1)] = op;
    return SloccOp(std::move(ops));
}

SloccOp SloccOp::inverse() const {
    std::vector<LocalOperator> inv;
    inv.reserve(ops_.size());
    for (const auto &op : ops_) {
        inv.push_back(op.inverse());
    }
    return SloccOp(std::move(inv));
}

double SloccOp::max_condition() const noexcept {
    double c = 1;
    for (const auto &op : ops_) {
        c = std::max(c, op.condition_number());
    }
    return c;
}

PureState apply_slocc(const PureState &state, const SloccOp &op) {
    if (state.qubits() != op.qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "operator and state qubit counts differ");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (int k = 1; k <= op.qubits(); ++k) {
        kernels::apply_single_qubit(amps, qubit_bit(state.qubits(), k), op[k].entries());
    }
    return {state.qubits(), std::move(amps)};
}

Decomposition decompose(const PureState &state, int distinguished) {
    int n = state.qubits();
    if (n < 2) {
        throw Error(ErrorCode::DimensionMismatch, "decomposition needs at least 2 qubits");
    }
    check_qubit_index(n, distinguished);
    unsigned bit = qubit_bit(n, distinguished);
    std::size_t half = state.dim() / 2;
    std::vector<Complex> a0(half), a1(half);
    for (std::size_t j = 0; j < half; ++j) {
        a0[j] = state[insert_bit(j, bit, 0)];
        a1[j] = state[insert_bit(j, bit, 1)];
    }
    return {PureState(n - 1, std::move(a0)), PureState(n - 1, std::move(a1)), distinguished};
}

PureState recompose(const Decomposition &d) {
    int n = d.phi0.qubits() + 1;
    if (d.phi1.qubits() != d.phi0.qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "phi0 and phi1 qubit counts differ");
    }
    check_qubits(n);
    check_qubit_index(n, d.distinguished);
    unsigned bit = qubit_bit(n, d.distinguished);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t j = 0; j < d.phi0.dim(); ++j) {
        amps[insert_bit(j, bit, 0)] = d.phi0[j];
        amps[insert_bit(j, bit, 1)] = d.phi1[j];
    }
    return {n, std::move(amps)};
}

int span_dimension(const PureState &phi0, const PureState &phi1, double eps) {
    if (phi0.dim() != phi1.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "phi0 and phi1 sizes differ");
    }
    Eigen::MatrixXcd m(2, static_cast<Eigen::Index>(phi0.dim()));
    for (std::size_t j = 0; j < phi0.dim(); ++j) {
        m(0, static_cast<Eigen::Index>(j)) = phi0[j];
        m(1, static_cast<Eigen::Index>(j)) = phi1[j];
    }
    auto s = singular_values(m);
    if (s[0] == 0) {
        throw Error(ErrorCode::ZeroState, "both components vanish");
    }
    return s[1] > eps * s[0] ? 2 : 1;
}

int span_dimension(const Decomposition &d, double eps) {
    return span_dimension(d.phi0, d.phi1, eps);
}

std::vector<int> Bipartition::left() const {
    std::vector<int> out;
    for (int k = 1; k <= qubits; ++k) {
        if (mask & (1u << (k - 1))) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<int> Bipartition::right() const {
    std::vector<int> out;
    for (int k = 1; k <= qubits; ++k) {
        if (!(mask & (1u << (k - 1)))) {
            out.push_back(k);
        }
    }
    return out;
}

bool Bipartition::single_qubit() const {
    int c = std::popcount(mask);
    return c == 1 || c == qubits - 1;
}

std::string Bipartition::label() const {
    std::string s;
    for (int k : left()) {
        s += std::to_string(k);
    }
    s += '|';
    for (int k : right()) {
        s += std::to_string(k);
    }
    return s;
}

std::vector<Bipartition> all_bipartitions4() {
    return {{0b0001, 4}, {0b1101, 4}, {0b1011, 4}, {0b0111, 4},
            {0b0011, 4}, {0b0101, 4}, {0b1001, 4}};
}

namespace {

std::vector<Bipartition> all_bipartitions(int n) {
    if (n == 4) {
        return all_bipartitions4();
    }
    std::vector<Bipartition> out;
    unsigned full = (1u << n) - 1;
    for (unsigned m = 1; m < full; m += 2) {
        out.push_back({m, n});
    }
    return out;
}

}  // namespace

std::vector<double> cut_singular_values(const PureState &state, const Bipartition &cut) {
    int n = state.qubits();
    if (cut.qubits != n) {
        throw Error(ErrorCode::DimensionMismatch, "bipartition and state qubit counts differ");
    }
    auto left = cut.left();
    auto right = cut.right();
    Eigen::MatrixXcd m(Eigen::Index{1} << left.size(), Eigen::Index{1} << right.size());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        Eigen::Index r = 0, c = 0;
        for (int k : left) {
            r = (r << 1) | static_cast<Eigen::Index>((i >> qubit_bit(n, k)) & 1);
        }
        for (int k : right) {
            c = (c << 1) | static_cast<Eigen::Index>((i >> qubit_bit(n, k)) & 1);
        }
        m(r, c) = state[i];
    }
    return singular_values(m);
}

std::map<Bipartition, int> bipartition_ranks(const PureState &state, double eps) {
    if (state.is_zero()) {
        throw Error(ErrorCode::ZeroState, "rank of the zero state");
    }
    std::map<Bipartition, int> out;
    for (const auto &cut : all_bipartitions(state.qubits())) {
        auto s = cut_singular_values(state, cut);
        out[cut] = static_cast<int>(
            std::count_if(s.begin(), s.end(), [&](double v) { return v > eps * s[0]; }));
    }
    return out;
}

PureState factor_out_qubit(const PureState &state, int qubit) {
    auto d = decompose(state, qubit);
    return d.phi0.norm() >= d.phi1.norm() ? d.phi0 : d.phi1;
}

}  // namespace slocc
