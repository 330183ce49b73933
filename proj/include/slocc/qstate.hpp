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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace slocc {

using Complex = std::complex<double>;
using WideComplex = std::complex<long double>;

inline constexpr double kDefaultEps = 1e-9;
inline constexpr double kSingularFloor = 1e-300;
inline constexpr int kMaxQubits = 4;

/// Unnormalized pure state of 1..4 qubits.
///
/// Amplitude index i is read as the bit string |q1 q2 ... qn>, qubit 1 being
/// the most significant bit. Nothing is ever normalized implicitly.
class PureState {
  public:
    PureState(int qubits, std::vector<Complex> amps);

    static PureState basis(int qubits, std::size_t index);

    int qubits() const noexcept {
        return qubits_;
    }
    std::size_t dim() const noexcept {
        return amps_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    Complex operator[](std::size_t i) const {
        return amps_.at(i);
    }

    double max_abs() const noexcept;
    double norm() const noexcept;
    bool is_zero() const noexcept;

    PureState scaled(Complex factor) const;

    friend PureState operator+(const PureState &a, const PureState &b);
    friend PureState operator*(Complex factor, const PureState &s) {
        return s.scaled(factor);
    }

    bool operator==(const PureState &) const = default;

  private:
    int qubits_;
    std::vector<Complex> amps_;
};

/// Bit position of a 1-based qubit index inside an amplitude index.
constexpr unsigned qubit_bit(int qubits, int qubit) {
    return static_cast<unsigned>(qubits - qubit);
}

/// Kronecker product |a> (x) |b>, with `a` occupying the leading qubits.
PureState tensor(const PureState &a, const PureState &b);

/// Invertible 2x2 complex matrix acting on one qubit, stored row-major.
class LocalOperator {
  public:
    LocalOperator(Complex m00, Complex m01, Complex m10, Complex m11);

    static LocalOperator identity() {
        return {1.0, 0.0, 0.0, 1.0};
    }
    static LocalOperator diag(Complex d0, Complex d1) {
        return {d0, 0.0, 0.0, d1};
    }

    Complex operator()(int row, int col) const {
        return m_[static_cast<std::size_t>(2 * row + col)];
    }
    const std::array<Complex, 4> &entries() const noexcept {
        return m_;
    }

    Complex det() const noexcept;
    /// Throws SingularOperator when |det| is below kSingularFloor.
    LocalOperator inverse() const;
    /// Descending singular values.
    std::array<double, 2> singular_values() const noexcept;
    double condition_number() const noexcept;

    LocalOperator operator*(const LocalOperator &rhs) const;

  private:
    std::array<Complex, 4> m_;
};

/// One local operator per qubit; the SLOCC group element A_1 (x) ... (x) A_n.
class SloccOp {
  public:
    explicit SloccOp(std::vector<LocalOperator> ops);

    static SloccOp identity(int qubits);
    /// Identity everywhere except `op` on `qubit` (1-based).
    static SloccOp single(int qubits, int qubit, const LocalOperator &op);

    int qubits() const noexcept {
        return static_cast<int>(ops_.size());
    }
    const LocalOperator &operator[](int qubit) const {
        return ops_.at(static_cast<std::size_t>(qubit - 1));
    }
    std::span<const LocalOperator> ops() const noexcept {
        return ops_;
    }

    SloccOp inverse() const;
    double max_condition() const noexcept;

  private:
    std::vector<LocalOperator> ops_;
};

PureState apply_slocc(const PureState &state, const SloccOp &op);

/// |psi> = |0>|phi0> + |1>|phi1> with respect to the distinguished qubit.
struct Decomposition {
    PureState phi0;
    PureState phi1;
    int distinguished;
};

Decomposition decompose(const PureState &state, int distinguished);

/// Inverse of decompose: reinserts the distinguished qubit at its position.
PureState recompose(const Decomposition &d);

/// 2 iff phi0 and phi1 are linearly independent: the smaller singular value
/// of the stacked 2 x 2^(n-1) matrix exceeds eps times the larger.
int span_dimension(const PureState &phi0, const PureState &phi1, double eps = kDefaultEps);
int span_dimension(const Decomposition &d, double eps = kDefaultEps);

/// A cut of the qubits into two non-empty parts. `mask` holds bit (k-1) for
/// every qubit k on the side that contains qubit 1.
struct Bipartition {
    unsigned mask = 0;
    int qubits = 4;

    std::vector<int> left() const;
    std::vector<int> right() const;
    bool single_qubit() const;
    std::string label() const;

    auto operator<=>(const Bipartition &) const = default;
};

/// The 7 nontrivial bipartitions of 4 qubits, single-qubit cuts first.
std::vector<Bipartition> all_bipartitions4();

/// Descending singular values of the amplitude matrix reshaped along `cut`.
std::vector<double> cut_singular_values(const PureState &state, const Bipartition &cut);

std::map<Bipartition, int> bipartition_ranks(const PureState &state, double eps = kDefaultEps);

/// Residual state of the other qubits when `qubit` is (numerically) in a
/// product with them: the dominant row of the reshaped amplitude matrix.
PureState factor_out_qubit(const PureState &state, int qubit);

}  // namespace slocc
