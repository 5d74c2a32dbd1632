// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/metrics.hpp"

#include "decent/error.hpp"
#include "decent/kernels.hpp"

#include "../core/parallel.hpp"

#include <algorithm>
#include <functional>

namespace decent {

void MetricConfig::validate() const {
    if (threshold <= Decimal{} || threshold >= Decimal::from_units(1))
        throw Error(ErrorCode::InvalidConfig, "threshold must be in (0,1), got " +
                                                  threshold.to_string());
    if (top_l < 1)
        throw Error(ErrorCode::InvalidConfig, "top_l must be >= 1");
    if (bucket_days < 1)
        throw Error(ErrorCode::InvalidConfig, "bucket_days must be >= 1");
    if (approvals_needed < 1)
        throw Error(ErrorCode::InvalidConfig, "approvals_needed must be >= 1");
}

std::uint32_t min_threshold_count(std::span<const std::int64_t> micros, Decimal threshold) {
    using i128 = __int128;
    auto total = kernels::sum_i64(micros);
    if (total == 0)
        return 0;

    std::vector<std::int64_t> sorted(micros.begin(), micros.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});

    // prefix > t * total, both sides scaled by 10^6 to stay integral.
    const i128 bar = static_cast<i128>(threshold.micros()) * total;
    i128 prefix = 0;
    std::uint32_t k = 0;
    for (auto v : sorted) {
        prefix += v;
        ++k;
        if (prefix * Decimal::kScale > bar)
            return k;
    }
    // Unreachable for 0 < t < 1 and a positive total.
    return k;
}

MtSeries mt_coefficient(const ImpactMatrix& impacts, const MetricConfig& cfg, unsigned jobs) {
    cfg.validate();
    MtSeries out;
    out.values.resize(impacts.days());
    detail::parallel_for(impacts.days(), jobs, [&](std::size_t d) {
        out.values[d] = min_threshold_count(impacts.column_micros(d), cfg.threshold);
    });
    return out;
}

std::uint32_t nakamoto_coefficient(const std::map<AccountId, Decimal>& day_impacts) {
    std::vector<std::int64_t> micros;
    micros.reserve(day_impacts.size());
    for (const auto& [id, v] : day_impacts)
        micros.push_back(v.micros());
    return min_threshold_count(micros, Decimal::from_micros(500'000));
}

ProductionMatrix::ProductionMatrix(std::vector<AccountId> producers, std::size_t buckets)
    : producers_(std::move(producers)), buckets_(buckets), micros_(producers_.size() * buckets, 0) {}

Decimal ProductionMatrix::at(std::size_t row, std::size_t bucket) const {
    return Decimal::from_micros(micros_.at(row * buckets_ + bucket));
}

void ProductionMatrix::set(std::size_t row, std::size_t bucket, Decimal value) {
    if (value < Decimal{})
        throw Error(ErrorCode::InvalidDecimal, "block count must be non-negative");
    micros_.at(row * buckets_ + bucket) = value.micros();
}

ProductionMatrix production_matrix(std::span<const DailyProduction> productions,
                                   const MetricConfig& cfg) {
    cfg.validate();
    if (productions.empty())
        return ProductionMatrix({}, 0);

    DayIndex last_day = 0;
    std::map<AccountId, Decimal> totals;
    for (const auto& day : productions) {
        last_day = std::max(last_day, day.day);
        for (const auto& [id, blocks] : day.produced)
            totals[id] += blocks;
    }
    std::size_t buckets = last_day / cfg.bucket_days + 1;

    std::vector<std::pair<AccountId, Decimal>> order;
    for (auto& [id, total] : totals)
        if (total > Decimal{})
            order.emplace_back(id, total);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (order.size() > cfg.top_l)
        order.resize(cfg.top_l);

    std::vector<AccountId> producers;
    std::map<AccountId, std::size_t> row_of;
    for (auto& [id, total] : order) {
        row_of.emplace(id, producers.size());
        producers.push_back(id);
    }

    ProductionMatrix matrix(std::move(producers), buckets);
    for (const auto& day : productions) {
        auto bucket = day.day / cfg.bucket_days;
        for (const auto& [id, blocks] : day.produced)
            if (auto it = row_of.find(id); it != row_of.end())
                matrix.set(it->second, bucket, matrix.at(it->second, bucket) + blocks);
    }
    return matrix;
}

NormalizedRateMatrix normalize_rates(const ProductionMatrix& blocks) {
    NormalizedRateMatrix out;
    out.producers = blocks.producers();
    out.buckets = blocks.buckets();
    out.values.assign(blocks.micros().size(), Decimal{});

    auto peak = blocks.micros().empty() ? 0 : kernels::max_i64(blocks.micros());
    if (peak <= 0)
        return out;
    auto max_b = Decimal::from_micros(peak);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = Decimal::from_micros(blocks.micros()[i]).ratio_round(max_b);
    return out;
}

Decimal capture_cost(const DailySnapshot& snapshot, std::uint32_t seats, const EngineConfig& cfg) {
    if (seats < 1 || seats > cfg.committee_size)
        throw Error(ErrorCode::SeatsOutOfRange, "seats " + std::to_string(seats) +
                                                    " not in [1, " +
                                                    std::to_string(cfg.committee_size) + "]");
    // The incumbent ranked committee_size - seats + 1 is the strongest one
    // the attacker has to push out.
    std::size_t rank = cfg.committee_size - seats + 1;
    if (snapshot.committee.size() < rank)
        return Decimal::unit();
    return snapshot.committee[rank - 1].weight + Decimal::unit();
}

} // namespace decent
