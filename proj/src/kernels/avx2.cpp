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


// AVX2/FMA variants. Each function carries its own target attribute so the
// translation unit builds without -mavx2 and is only entered after the CPUID
// check in dispatch.cpp.

#include "slocc/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>

#define SLOCC_AVX2 __attribute__((target("avx2,fma")))
#define SLOCC_AVX2_INLINE __attribute__((target("avx2,fma"), always_inline)) inline
#define SLOCC_AVX2_LAMBDA __attribute__((target("avx2,fma"), always_inline))

namespace slocc::kernels::avx2 {

namespace {

// Four complex numbers, split into real and imaginary lanes.
struct C4 {
    __m256d re;
    __m256d im;
};

SLOCC_AVX2_INLINE C4 add(C4 a, C4 b) {
    return {_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im)};
}

SLOCC_AVX2_INLINE C4 sub(C4 a, C4 b) {
    return {_mm256_sub_pd(a.re, b.re), _mm256_sub_pd(a.im, b.im)};
}

SLOCC_AVX2_INLINE C4 mul(C4 a, C4 b) {
    return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
            _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

SLOCC_AVX2_INLINE C4 neg(C4 a) {
    __m256d z = _mm256_setzero_pd();
    return {_mm256_sub_pd(z, a.re), _mm256_sub_pd(z, a.im)};
}

SLOCC_AVX2_INLINE C4 scale(C4 a, double s) {
    __m256d v = _mm256_set1_pd(s);
    return {_mm256_mul_pd(a.re, v), _mm256_mul_pd(a.im, v)};
}

SLOCC_AVX2_INLINE C4 broadcast(Complex c) {
    return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())};
}

// |z|, without the overflow guard of std::abs; inputs here are products of
// at most four amplitudes.
SLOCC_AVX2_INLINE __m256d cabs(C4 a) {
    return _mm256_sqrt_pd(_mm256_fmadd_pd(a.re, a.re, _mm256_mul_pd(a.im, a.im)));
}

SLOCC_AVX2_INLINE C4 load4(const Complex *p) {
    // p[0..3] interleaved (re, im); deinterleave into lanes 0..3.
    __m256d lo = _mm256_loadu_pd(reinterpret_cast<const double *>(p));
    __m256d hi = _mm256_loadu_pd(reinterpret_cast<const double *>(p + 2));
    __m256d re = _mm256_unpacklo_pd(lo, hi);  // r0 r2 r1 r3
    __m256d im = _mm256_unpackhi_pd(lo, hi);  // i0 i2 i1 i3
    return {_mm256_permute4x64_pd(re, 0b11011000), _mm256_permute4x64_pd(im, 0b11011000)};
}

SLOCC_AVX2_INLINE __m256d safe_div(__m256d num, __m256d den) {
    __m256d zero = _mm256_setzero_pd();
    __m256d positive = _mm256_cmp_pd(den, zero, _CMP_GT_OQ);
    return _mm256_and_pd(_mm256_div_pd(num, den), positive);
}

// m * v for two interleaved complex numbers and a broadcast complex m.
SLOCC_AVX2_INLINE __m256d cmul_scalar(__m256d v, Complex m) {
    __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(v, _mm256_set1_pd(m.real())),
                            _mm256_mul_pd(swapped, _mm256_set1_pd(m.imag())));
}

}  // namespace

bool available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

SLOCC_AVX2 void apply_single_qubit(std::span<Complex> amps, unsigned target_bit,
                                   const std::array<Complex, 4> &m) {
    std::size_t stride = std::size_t{1} << target_bit;
    double *base = reinterpret_cast<double *>(amps.data());
    if (target_bit == 0) {
        // One (a, c) pair per register.
        __m256d m_ac = _mm256_setr_pd(m[0].real(), m[0].imag(), m[2].real(), m[2].imag());
        __m256d m_bd = _mm256_setr_pd(m[1].real(), m[1].imag(), m[3].real(), m[3].imag());
        __m256d m_ac_sw = _mm256_permute_pd(m_ac, 0b0101);
        __m256d m_bd_sw = _mm256_permute_pd(m_bd, 0b0101);
        for (std::size_t i = 0; i + 1 < amps.size(); i += 2) {
            __m256d v = _mm256_loadu_pd(base + 2 * i);
            __m256d aa = _mm256_permute2f128_pd(v, v, 0x00);
            __m256d cc = _mm256_permute2f128_pd(v, v, 0x11);
            // (re, re) and (im, im) broadcasts of each element.
            __m256d aa_re = _mm256_movedup_pd(aa);
            __m256d aa_im = _mm256_permute_pd(aa, 0b1111);
            __m256d cc_re = _mm256_movedup_pd(cc);
            __m256d cc_im = _mm256_permute_pd(cc, 0b1111);
            __m256d r = _mm256_addsub_pd(_mm256_mul_pd(aa_re, m_ac), _mm256_mul_pd(aa_im, m_ac_sw));
            r = _mm256_add_pd(r, _mm256_addsub_pd(_mm256_mul_pd(cc_re, m_bd),
                                                  _mm256_mul_pd(cc_im, m_bd_sw)));
            _mm256_storeu_pd(base + 2 * i, r);
        }
        return;
    }
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        if (i & stride) {
            continue;
        }
        __m256d a = _mm256_loadu_pd(base + 2 * i);
        __m256d c = _mm256_loadu_pd(base + 2 * (i + stride));
        __m256d top = _mm256_add_pd(cmul_scalar(a, m[0]), cmul_scalar(c, m[1]));
        __m256d bottom = _mm256_add_pd(cmul_scalar(a, m[2]), cmul_scalar(c, m[3]));
        _mm256_storeu_pd(base + 2 * i, top);
        _mm256_storeu_pd(base + 2 * (i + stride), bottom);
    }
}

SLOCC_AVX2 void pencil_sweep(std::span<const Complex, 8> phi0, std::span<const Complex, 8> phi1,
                             std::span<const Complex> xs, std::span<const Complex> ys,
                             std::span<SweepRow> out) {
    std::size_t n = out.size();
    std::size_t full = n - n % 4;
    std::array<C4, 8> f0, f1;
    for (int k = 0; k < 8; ++k) {
        f0[k] = broadcast(phi0[k]);
        f1[k] = broadcast(phi1[k]);
    }
    for (std::size_t base = 0; base < full; base += 4) {
        C4 x = load4(xs.data() + base);
        C4 y = load4(ys.data() + base);
        std::array<C4, 8> a;
        __m256d m[8];
        __m256d amax = _mm256_setzero_pd();
        for (int k = 0; k < 8; ++k) {
            a[k] = add(mul(x, f0[k]), mul(y, f1[k]));
            m[k] = cabs(a[k]);
            amax = _mm256_max_pd(amax, m[k]);
        }
        C4 p = sub(add(sub(mul(a[0], a[7]), mul(a[2], a[5])), mul(a[1], a[6])), mul(a[3], a[4]));
        C4 gx = sub(mul(a[2], a[4]), mul(a[0], a[6]));
        C4 gy = sub(mul(a[3], a[5]), mul(a[1], a[7]));
        C4 inv = sub(mul(p, p), scale(mul(gx, gy), 4.0));
        C4 p2 = scale(p, 2.0), x4 = scale(gx, 4.0), y4 = scale(gy, 4.0);
        std::array<C4, 8> g = {add(mul(p2, a[7]), mul(y4, a[6])),
                               add(mul(p2, a[6]), mul(x4, a[7])),
                               sub(neg(mul(p2, a[5])), mul(y4, a[4])),
                               sub(neg(mul(p2, a[4])), mul(x4, a[5])),
                               sub(neg(mul(p2, a[3])), mul(y4, a[2])),
                               sub(neg(mul(p2, a[2])), mul(x4, a[3])),
                               add(mul(p2, a[1]), mul(y4, a[0])),
                               add(mul(p2, a[0]), mul(x4, a[1]))};
        __m256d gmax = _mm256_setzero_pd();
        for (const auto &v : g) {
            gmax = _mm256_max_pd(gmax, cabs(v));
        }
        std::array<C4, 6> q = {sub(mul(a[0], a[3]), mul(a[1], a[2])),
                               sub(mul(a[5], a[6]), mul(a[4], a[7])),
                               sub(mul(a[1], a[4]), mul(a[0], a[5])),
                               sub(mul(a[3], a[6]), mul(a[2], a[7])),
                               sub(mul(a[3], a[5]), mul(a[1], a[7])),
                               sub(mul(a[2], a[4]), mul(a[0], a[6]))};
        __m256d ainv = cabs(inv);
        __m256d second = safe_div(_mm256_sqrt_pd(ainv), _mm256_mul_pd(amax, amax));
        __m256d first = safe_div(ainv, _mm256_mul_pd(amax, gmax));
        __m256d has_grad = _mm256_cmp_pd(gmax, _mm256_setzero_pd(), _CMP_GT_OQ);
        __m256d ratio = _mm256_blendv_pd(second, _mm256_min_pd(first, second), has_grad);
        auto max4 = [&](int i, int j, int k, int l) SLOCC_AVX2_LAMBDA {
            return _mm256_max_pd(_mm256_max_pd(m[i], m[j]), _mm256_max_pd(m[k], m[l]));
        };
        __m256d sm[6] = {max4(0, 1, 2, 3), max4(4, 5, 6, 7), max4(0, 1, 4, 5),
                        max4(2, 3, 6, 7), max4(1, 3, 5, 7), max4(0, 2, 4, 6)};
        __m256d cr[3];
        for (int k = 0; k < 3; ++k) {
            cr[k] = _mm256_max_pd(safe_div(cabs(q[2 * k]), _mm256_mul_pd(amax, sm[2 * k])),
                                  safe_div(cabs(q[2 * k + 1]), _mm256_mul_pd(amax, sm[2 * k + 1])));
        }
        alignas(32) double buf[6][4];
        _mm256_store_pd(buf[0], inv.re);
        _mm256_store_pd(buf[1], inv.im);
        _mm256_store_pd(buf[2], ratio);
        for (int k = 0; k < 3; ++k) {
            _mm256_store_pd(buf[3 + k], cr[k]);
        }
        for (int l = 0; l < 4; ++l) {
            SweepRow &row = out[base + l];
            row.inv = {buf[0][l], buf[1][l]};
            row.ghz_ratio = buf[2][l];
            row.clause_ratio = {buf[3][l], buf[4][l], buf[5][l]};
        }
    }
    if (full < n) {
        scalar::pencil_sweep(phi0, phi1, xs.subspan(full), ys.subspan(full), out.subspan(full));
    }
}

}  // namespace slocc::kernels::avx2

#else

namespace slocc::kernels::avx2 {

bool available() {
    return false;
}

void apply_single_qubit(std::span<Complex> amps, unsigned target_bit,
                        const std::array<Complex, 4> &m) {
    scalar::apply_single_qubit(amps, target_bit, m);
}

void pencil_sweep(std::span<const Complex, 8> phi0, std::span<const Complex, 8> phi1,
                  std::span<const Complex> xs, std::span<const Complex> ys,
                  std::span<SweepRow> out) {
    scalar::pencil_sweep(phi0, phi1, xs, ys, out);
}

}  // namespace slocc::kernels::avx2

#endif
