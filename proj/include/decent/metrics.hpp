// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/allocation.hpp"
#include "decent/decimal.hpp"
#include "decent/election.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace decent {

struct MetricConfig {
    Decimal threshold = Decimal::from_micros(500'000);
    std::uint32_t top_l = 50;
    std::uint32_t bucket_days = 30;
    std::uint32_t approvals_needed = 17;

    /// Throws Error{InvalidConfig}.
    void validate() const;
};

/// One f_j per day; 0 marks a day with no impact at all.
struct MtSeries {
    std::vector<std::uint32_t> values;

    bool operator==(const MtSeries&) const = default;
};

/// Smallest k such that the k largest values sum to strictly more than
/// threshold * total. Returns 0 when the total is 0.
std::uint32_t min_threshold_count(std::span<const std::int64_t> micros, Decimal threshold);

/// Minimum-threshold coefficient per impact-matrix column.
MtSeries mt_coefficient(const ImpactMatrix& impacts, const MetricConfig& cfg, unsigned jobs = 1);

std::uint32_t nakamoto_coefficient(const std::map<AccountId, Decimal>& day_impacts);

/// Top-l producers by all-time blocks, bucketed by floor(day / bucket_days).
class ProductionMatrix {
public:
    ProductionMatrix() = default;
    ProductionMatrix(std::vector<AccountId> producers, std::size_t buckets);

    const std::vector<AccountId>& producers() const noexcept { return producers_; }
    std::size_t rows() const noexcept { return producers_.size(); }
    std::size_t buckets() const noexcept { return buckets_; }

    Decimal at(std::size_t row, std::size_t bucket) const;
    void set(std::size_t row, std::size_t bucket, Decimal value);
    std::span<const std::int64_t> micros() const noexcept { return micros_; }

    bool operator==(const ProductionMatrix&) const = default;

private:
    std::vector<AccountId> producers_;
    std::size_t buckets_ = 0;
    std::vector<std::int64_t> micros_; // row-major
};

ProductionMatrix production_matrix(std::span<const DailyProduction> productions,
                                   const MetricConfig& cfg);

/// Entries b / max(B), rounded half-up to six fractional digits.
struct NormalizedRateMatrix {
    std::vector<AccountId> producers;
    std::size_t buckets = 0;
    std::vector<Decimal> values; // row-major

    Decimal at(std::size_t row, std::size_t bucket) const { return values.at(row * buckets + bucket); }

    bool operator==(const NormalizedRateMatrix&) const = default;
};

NormalizedRateMatrix normalize_rates(const ProductionMatrix& blocks);

/// Least voting power that seats `seats` fresh attacker candidates in the
/// committee when the attacker approves all of them: the weight of the
/// incumbent ranked committee_size - seats + 1, plus one micro-unit.
/// Throws Error{SeatsOutOfRange}.
Decimal capture_cost(const DailySnapshot& snapshot, std::uint32_t seats, const EngineConfig& cfg);

} // namespace decent
