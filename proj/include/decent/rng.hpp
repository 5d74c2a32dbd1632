// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

namespace decent {

/// SplitMix64 step; used for seeding and for deriving per-stream seeds.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Derives an independent seed for (seed, stream, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

/// xoshiro256** 1.0, state seeded from SplitMix64. Bounded integers use
/// Lemire's multiply-and-reject, so streams are identical on every platform
/// (unlike std:: distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept;
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept;
    bool chance(double p) noexcept { return uniform() < p; }

private:
    std::uint64_t s_[4];
};

} // namespace decent
