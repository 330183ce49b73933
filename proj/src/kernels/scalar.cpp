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


#include <algorithm>
#include <cmath>

#include "slocc/kernels.hpp"

namespace slocc::kernels::scalar {

void apply_single_qubit(std::span<Complex> amps, unsigned target_bit,
                        const std::array<Complex, 4> &m) {
    std::size_t stride = std::size_t{1} << target_bit;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & stride) {
            continue;
        }
        Complex a = amps[i];
        Complex c = amps[i + stride];
        amps[i] = m[0] * a + m[1] * c;
        amps[i + stride] = m[2] * a + m[3] * c;
    }
}

void pencil_sweep(std::span<const Complex, 8> phi0, std::span<const Complex, 8> phi1,
                  std::span<const Complex> xs, std::span<const Complex> ys,
                  std::span<SweepRow> out) {
    for (std::size_t n = 0; n < out.size(); ++n) {
        std::array<Complex, 8> a;
        double amax = 0;
        for (int k = 0; k < 8; ++k) {
            a[k] = xs[n] * phi0[k] + ys[n] * phi1[k];
            amax = std::max(amax, std::abs(a[k]));
        }
        Complex p = a[0] * a[7] - a[2] * a[5] + a[1] * a[6] - a[3] * a[4];
        Complex x = a[2] * a[4] - a[0] * a[6];
        Complex y = a[3] * a[5] - a[1] * a[7];
        Complex inv = p * p - 4.0 * (x * y);
        Complex p2 = 2.0 * p, x4 = 4.0 * x, y4 = 4.0 * y;
        std::array<Complex, 8> g = {p2 * a[7] + y4 * a[6],   p2 * a[6] + x4 * a[7],
                                    -(p2 * a[5]) - y4 * a[4], -(p2 * a[4]) - x4 * a[5],
                                    -(p2 * a[3]) - y4 * a[2], -(p2 * a[2]) - x4 * a[3],
                                    p2 * a[1] + y4 * a[0],   p2 * a[0] + x4 * a[1]};
        double gmax = 0;
        for (const auto &v : g) {
            gmax = std::max(gmax, std::abs(v));
        }
        std::array<Complex, 6> q = {a[0] * a[3] - a[1] * a[2], a[5] * a[6] - a[4] * a[7],
                                    a[1] * a[4] - a[0] * a[5], a[3] * a[6] - a[2] * a[7],
                                    a[3] * a[5] - a[1] * a[7], a[2] * a[4] - a[0] * a[6]};
        SweepRow &row = out[n];
        row.inv = inv;
        double denom = amax * gmax;
        double second = amax > 0 ? std::sqrt(std::abs(inv)) / (amax * amax) : 0.0;
        row.ghz_ratio = denom > 0 ? std::min(std::abs(inv) / denom, second) : second;
        // Slice maxima: qubit-1 slices {0..3}, {4..7}; qubit-2 {0,1,4,5},
        // {2,3,6,7}; qubit-3 {1,3,5,7}, {0,2,4,6}.
        std::array<double, 8> m;
        for (int k = 0; k < 8; ++k) {
            m[k] = std::abs(a[k]);
        }
        std::array<double, 6> sm = {std::max(std::max(m[0], m[1]), std::max(m[2], m[3])),
                                    std::max(std::max(m[4], m[5]), std::max(m[6], m[7])),
                                    std::max(std::max(m[0], m[1]), std::max(m[4], m[5])),
                                    std::max(std::max(m[2], m[3]), std::max(m[6], m[7])),
                                    std::max(std::max(m[1], m[3]), std::max(m[5], m[7])),
                                    std::max(std::max(m[0], m[2]), std::max(m[4], m[6]))};
        for (int k = 0; k < 3; ++k) {
            double best = 0;
            for (int i = 2 * k; i < 2 * k + 2; ++i) {
                double den = amax * sm[i];
                best = std::max(best, den > 0 ? std::abs(q[i]) / den : 0.0);
            }
            row.clause_ratio[k] = best;
        }
    }
}

}  // namespace slocc::kernels::scalar
