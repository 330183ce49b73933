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

// Exact arithmetic over the Gaussian rationals Q(i), plus the small amount
// of polynomial and linear algebra the exact classification path needs.

#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/qstate.hpp"

namespace slocc {

class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussianRational(long v) : re_(v), im_(0) {
    }

    /// Exact binary value of a finite double (no decimal rounding).
    static GaussianRational from_double(double re, double im = 0.0);
    /// Exact value of a decimal literal ("-1.25e-3") or a fraction ("3/7").
    /// Throws ParseError.
    static mpq_class parse_rational(std::string_view text);

    const mpq_class &real() const noexcept {
        return re_;
    }
    const mpq_class &imag() const noexcept {
        return im_;
    }
    bool is_zero() const {
        return sgn(re_) == 0 && sgn(im_) == 0;
    }

    GaussianRational conj() const {
        return {re_, -im_};
    }
    /// |z|^2, exact.
    mpq_class norm() const {
        return re_ * re_ + im_ * im_;
    }

    Complex to_complex() const;
    WideComplex to_wide() const;
    std::string str() const;

    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    /// Throws ZeroState on division by zero.
    friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b);
    GaussianRational operator-() const {
        return {-re_, -im_};
    }
    GaussianRational &operator+=(const GaussianRational &b) {
        return *this = *this + b;
    }
    GaussianRational &operator-=(const GaussianRational &b) {
        return *this = *this - b;
    }
    GaussianRational &operator*=(const GaussianRational &b) {
        return *this = *this * b;
    }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Amplitudes of a state known exactly.
class ExactState {
  public:
    ExactState(int qubits, std::vector<GaussianRational> amps);

    static ExactState from_numeric(const PureState &state);

    int qubits() const noexcept {
        return qubits_;
    }
    std::size_t dim() const noexcept {
        return amps_.size();
    }
    const std::vector<GaussianRational> &amplitudes() const noexcept {
        return amps_;
    }
    const GaussianRational &operator[](std::size_t i) const {
        return amps_.at(i);
    }
    bool is_zero() const;
    PureState to_numeric() const;

  private:
    int qubits_;
    std::vector<GaussianRational> amps_;
};

struct ExactDecomposition {
    ExactState phi0;
    ExactState phi1;
    int distinguished;
};

ExactDecomposition decompose(const ExactState &state, int distinguished);

/// Rank of a dense matrix over Q(i) by Gaussian elimination.
int exact_rank(std::vector<std::vector<GaussianRational>> rows);

int span_dimension(const ExactState &phi0, const ExactState &phi1);
std::map<Bipartition, int> bipartition_ranks(const ExactState &state);
ExactState factor_out_qubit(const ExactState &state, int qubit);

/// Univariate polynomial over Q(i); coeffs[k] multiplies t^k. Always kept
/// trimmed, so the zero polynomial has no coefficients.
class ExactPoly {
  public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<GaussianRational> coeffs);

    int degree() const {
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const {
        return c_.empty();
    }
    const std::vector<GaussianRational> &coeffs() const noexcept {
        return c_;
    }
    const GaussianRational &leading() const {
        return c_.back();
    }

    ExactPoly derivative() const;
    ExactPoly monic() const;
    GaussianRational evaluate(const GaussianRational &t) const;

    friend ExactPoly operator*(const ExactPoly &a, const ExactPoly &b);
    friend bool operator==(const ExactPoly &a, const ExactPoly &b) {
        return a.c_ == b.c_;
    }

    /// Quotient and remainder; throws ZeroState on a zero divisor.
    static std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly &a, const ExactPoly &b);

  private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Monic gcd; gcd(0, 0) is the zero polynomial.
ExactPoly gcd(const ExactPoly &a, const ExactPoly &b);
ExactPoly squarefree_part(const ExactPoly &p);
/// Yun's algorithm: p = lc * prod_i factors[i]^(i+1) with squarefree, pairwise
/// coprime factors.
std::vector<ExactPoly> squarefree_decomposition(const ExactPoly &p);

}  // namespace slocc
