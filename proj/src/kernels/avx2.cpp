// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/kernels.hpp"

#if defined(DECENT_KERNELS_X86)

#include <immintrin.h>

// Compiled with per-function target attributes so the translation unit does
// not need -mavx2; the dispatcher only calls in after checking cpuid.
#define DECENT_AVX2 __attribute__((target("avx2")))

namespace decent::kernels::avx2 {

DECENT_AVX2 std::int64_t sum_i64(const std::int64_t* data, std::size_t n) noexcept {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_epi64(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i)));
        acc1 = _mm256_add_epi64(acc1,
                                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 4)));
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_add_epi64(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i)));
    acc0 = _mm256_add_epi64(acc0, acc1);

    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc0);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        total += static_cast<std::uint64_t>(data[i]);
    return static_cast<std::int64_t>(total);
}

DECENT_AVX2 std::int64_t max_i64(const std::int64_t* data, std::size_t n) noexcept {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::size_t i = 0;
    if (n >= 4) {
        __m256i vbest = _mm256_set1_epi64x(best);
        for (; i + 4 <= n; i += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
            __m256i gt = _mm256_cmpgt_epi64(v, vbest);
            vbest = _mm256_blendv_epi8(vbest, v, gt);
        }
        alignas(32) std::int64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vbest);
        for (auto lane : lanes)
            best = lane > best ? lane : best;
    }
    for (; i < n; ++i)
        best = data[i] > best ? data[i] : best;
    return best;
}

} // namespace decent::kernels::avx2

#endif
