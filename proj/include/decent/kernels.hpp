// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Reductions over fixed-point micro-unit columns. Every variant is exact
// integer arithmetic, so all ISAs must return bit-identical results; the
// equivalence tests hold them to that.

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace decent::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

/// ISAs compiled in and supported by the running CPU. Scalar always first.
std::vector<Isa> available_isas();

/// ISA picked by the dispatcher on first use (best available, unless the
/// DECENT_METER_ISA environment variable names a supported one).
Isa active_isa();

/// Sum with two's-complement wraparound on overflow (callers keep totals
/// in range).
std::int64_t sum_i64(std::span<const std::int64_t> values);
/// Largest element; numeric_limits::min() for an empty span.
std::int64_t max_i64(std::span<const std::int64_t> values);

std::int64_t sum_i64(Isa isa, std::span<const std::int64_t> values);
std::int64_t max_i64(Isa isa, std::span<const std::int64_t> values);

namespace scalar {
std::int64_t sum_i64(const std::int64_t* data, std::size_t n) noexcept;
std::int64_t max_i64(const std::int64_t* data, std::size_t n) noexcept;
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DECENT_KERNELS_X86 1
namespace avx2 {
std::int64_t sum_i64(const std::int64_t* data, std::size_t n) noexcept;
std::int64_t max_i64(const std::int64_t* data, std::size_t n) noexcept;
} // namespace avx2
#endif

#if defined(__aarch64__)
#define DECENT_KERNELS_NEON 1
namespace neon {
std::int64_t sum_i64(const std::int64_t* data, std::size_t n) noexcept;
std::int64_t max_i64(const std::int64_t* data, std::size_t n) noexcept;
} // namespace neon
#endif

} // namespace decent::kernels
