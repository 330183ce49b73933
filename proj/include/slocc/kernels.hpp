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

// Data-parallel inner loops. Every kernel has a portable scalar reference in
// `scalar::` and an AVX2/FMA variant in `avx2::`; the unqualified entry points
// dispatch at runtime on CPUID. Set SLOCC_ISA=scalar to force the reference
// path.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace slocc::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// ISA the dispatching entry points use in this process.
Isa active_isa();

/// Per-point result of a pencil sweep.
///
/// `ghz_ratio` is min(|inv| / (max|a| * max|d inv/d a_i|), sqrt|inv| / max|a|^2)
/// in double precision, adequate for generic points of a line (classify3
/// evaluates the invariant more precisely); `clause_ratio[k]` is
/// the larger of |q_i| / (max|a| * max|a_j in slice i|) over the two clause
/// quantities q_2k, q_2k+1.
struct SweepRow {
    Complex inv;
    double ghz_ratio;
    std::array<double, 3> clause_ratio;
};

/// amps <- (I (x) .. m .. (x) I) amps, where m acts on bit `target_bit` of
/// the amplitude index. `m` is row-major.
void apply_single_qubit(std::span<Complex> amps, unsigned target_bit,
                        const std::array<Complex, 4> &m);

/// Evaluates the 3-qubit invariants of x_i*phi0 + y_i*phi1 for every i.
void pencil_sweep(std::span<const Complex, 8> phi0, std::span<const Complex, 8> phi1,
                  std::span<const Complex> xs, std::span<const Complex> ys,
                  std::span<SweepRow> out);

namespace scalar {
void apply_single_qubit(std::span<Complex> amps, unsigned target_bit,
                        const std::array<Complex, 4> &m);
void pencil_sweep(std::span<const Complex, 8> phi0, std::span<const Complex, 8> phi1,
                  std::span<const Complex> xs, std::span<const Complex> ys,
                  std::span<SweepRow> out);
}  // namespace scalar

namespace avx2 {
/// True when the binary was built for x86-64 and the CPU reports AVX2+FMA.
bool available();
void apply_single_qubit(std::span<Complex> amps, unsigned target_bit,
                        const std::array<Complex, 4> &m);
void pencil_sweep(std::span<const Complex, 8> phi0, std::span<const Complex, 8> phi1,
                  std::span<const Complex> xs, std::span<const Complex> ys,
                  std::span<SweepRow> out);
}  // namespace avx2

}  // namespace slocc::kernels
