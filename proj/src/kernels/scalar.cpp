// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/kernels.hpp"

namespace decent::kernels::scalar {

std::int64_t sum_i64(const std::int64_t* data, std::size_t n) noexcept {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += static_cast<std::uint64_t>(data[i]);
    return static_cast<std::int64_t>(acc);
}

std::int64_t max_i64(const std::int64_t* data, std::size_t n) noexcept {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < n; ++i)
        if (data[i] > best)
            best = data[i];
    return best;
}

} // namespace decent::kernels::scalar
