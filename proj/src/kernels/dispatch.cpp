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


#include <cstdlib>
#include <string>

#include "slocc/kernels.hpp"

namespace slocc::kernels {

namespace {

Isa detect() {
    const char *forced = std::getenv("SLOCC_ISA");
    if (forced != nullptr && std::string(forced) == "scalar") {
        return Isa::Scalar;
    }
    return avx2::available() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

std::string_view to_string(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

Isa active_isa() {
    static const Isa isa = detect();
    return isa;
}

void apply_single_qubit(std::span<Complex> amps, unsigned target_bit,
                        const std::array<Complex, 4> &m) {
    if (active_isa() == Isa::Avx2) {
        avx2::apply_single_qubit(amps, target_bit, m);
    } else {
        scalar::apply_single_qubit(amps, target_bit, m);
    }
}

void pencil_sweep(std::span<const Complex, 8> phi0, std::span<const Complex, 8> phi1,
                  std::span<const Complex> xs, std::span<const Complex> ys,
                  std::span<SweepRow> out) {
    if (active_isa() == Isa::Avx2) {
        avx2::pencil_sweep(phi0, phi1, xs, ys, out);
    } else {
        scalar::pencil_sweep(phi0, phi1, xs, ys, out);
    }
}

}  // namespace slocc::kernels
