// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/kernels.hpp"

#include <cstdlib>
#include <string>

namespace decent::kernels {

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
#if defined(DECENT_KERNELS_X86)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2"))
        out.push_back(Isa::Avx2);
#endif
#if defined(DECENT_KERNELS_NEON)
    out.push_back(Isa::Neon);
#endif
    return out;
}

namespace {

Isa pick_isa() {
    auto isas = available_isas();
    if (const char* forced = std::getenv("DECENT_METER_ISA")) {
        for (auto isa : isas)
            if (to_string(isa) == forced)
                return isa;
    }
    return isas.back();
}

} // namespace

Isa active_isa() {
    static const Isa isa = pick_isa();
    return isa;
}

std::int64_t sum_i64(Isa isa, std::span<const std::int64_t> values) {
    switch (isa) {
#if defined(DECENT_KERNELS_X86)
    case Isa::Avx2: return avx2::sum_i64(values.data(), values.size());
#endif
#if defined(DECENT_KERNELS_NEON)
    case Isa::Neon: return neon::sum_i64(values.data(), values.size());
#endif
    default: return scalar::sum_i64(values.data(), values.size());
    }
}

std::int64_t max_i64(Isa isa, std::span<const std::int64_t> values) {
    switch (isa) {
#if defined(DECENT_KERNELS_X86)
    case Isa::Avx2: return avx2::max_i64(values.data(), values.size());
#endif
#if defined(DECENT_KERNELS_NEON)
    case Isa::Neon: return neon::max_i64(values.data(), values.size());
#endif
    default: return scalar::max_i64(values.data(), values.size());
    }
}

std::int64_t sum_i64(std::span<const std::int64_t> values) { return sum_i64(active_isa(), values); }

std::int64_t max_i64(std::span<const std::int64_t> values) { return max_i64(active_isa(), values); }

} // namespace decent::kernels
