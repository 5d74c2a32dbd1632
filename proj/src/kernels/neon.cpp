// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/kernels.hpp"

#if defined(DECENT_KERNELS_NEON)

#include <arm_neon.h>

namespace decent::kernels::neon {

std::int64_t sum_i64(const std::int64_t* data, std::size_t n) noexcept {
    uint64x2_t acc0 = vdupq_n_u64(0);
    uint64x2_t acc1 = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_u64(acc0, vreinterpretq_u64_s64(vld1q_s64(data + i)));
        acc1 = vaddq_u64(acc1, vreinterpretq_u64_s64(vld1q_s64(data + i + 2)));
    }
    std::uint64_t total = vaddvq_u64(vaddq_u64(acc0, acc1));
    for (; i < n; ++i)
        total += static_cast<std::uint64_t>(data[i]);
    return static_cast<std::int64_t>(total);
}

std::int64_t max_i64(const std::int64_t* data, std::size_t n) noexcept {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::size_t i = 0;
    if (n >= 2) {
        int64x2_t vbest = vdupq_n_s64(best);
        for (; i + 2 <= n; i += 2) {
            int64x2_t v = vld1q_s64(data + i);
            vbest = vbslq_s64(vcgtq_s64(v, vbest), v, vbest);
        }
        std::int64_t a = vgetq_lane_s64(vbest, 0);
        std::int64_t b = vgetq_lane_s64(vbest, 1);
        best = a > b ? a : b;
    }
    for (; i < n; ++i)
        best = data[i] > best ? data[i] : best;
    return best;
}

} // namespace decent::kernels::neon

#endif
