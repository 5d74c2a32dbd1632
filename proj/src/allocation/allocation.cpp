// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/allocation.hpp"

#include "decent/error.hpp"
#include "decent/kernels.hpp"

#include "../core/parallel.hpp"

#include <algorithm>
#include <utility>

namespace decent {

std::vector<DailyProduction> extract_production(const EventLog& log) {
    std::vector<DailyProduction> out(static_cast<std::size_t>(log.horizon) + 1);
    for (std::size_t d = 0; d < out.size(); ++d)
        out[d].day = static_cast<DayIndex>(d);
    for (const auto& ev : log.events) {
        if (ev.kind != EventKind::BlockProduced)
            continue;
        if (ev.day >= out.size())
            throw Error(ErrorCode::MisalignedDays, "event beyond log horizon");
        out[ev.day].produced[ev.producer()] += ev.amount.value_or(Decimal{});
    }
    for (auto& day : out)
        std::erase_if(day.produced, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

ImpactMatrix::ImpactMatrix(std::vector<AccountId> individuals, std::size_t days)
    : individuals_(std::move(individuals)), days_(days), micros_(individuals_.size() * days, 0) {}

Decimal ImpactMatrix::at(std::size_t row, std::size_t day) const {
    return Decimal::from_micros(micros_.at(day * rows() + row));
}

void ImpactMatrix::set(std::size_t row, std::size_t day, Decimal value) {
    if (value < Decimal{})
        throw Error(ErrorCode::InvalidDecimal, "impact must be non-negative");
    micros_.at(day * rows() + row) = value.micros();
}

std::span<const std::int64_t> ImpactMatrix::column_micros(std::size_t day) const {
    return std::span<const std::int64_t>(micros_).subspan(day * rows(), rows());
}

Decimal ImpactMatrix::column_total(std::size_t day) const {
    return Decimal::from_micros(kernels::sum_i64(column_micros(day)));
}

Decimal ImpactMatrix::row_total(std::size_t row) const {
    Decimal total;
    for (std::size_t d = 0; d < days_; ++d)
        total += at(row, d);
    return total;
}

ImpactMatrix assemble_impact_matrix(std::span<const std::map<AccountId, Decimal>> per_day) {
    std::map<AccountId, Decimal> totals;
    for (const auto& day : per_day)
        for (const auto& [id, v] : day)
            totals[id] += v;

    std::vector<std::pair<AccountId, Decimal>> order;
    for (auto& [id, total] : totals)
        if (total > Decimal{})
            order.emplace_back(id, total);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    std::vector<AccountId> individuals;
    std::map<AccountId, std::size_t> row_of;
    for (auto& [id, total] : order) {
        row_of.emplace(id, individuals.size());
        individuals.push_back(id);
    }

    ImpactMatrix matrix(std::move(individuals), per_day.size());
    for (std::size_t d = 0; d < per_day.size(); ++d)
        for (const auto& [id, v] : per_day[d])
            if (auto it = row_of.find(id); it != row_of.end())
                matrix.set(it->second, d, v);
    return matrix;
}

namespace {

using Supporters = std::vector<std::pair<AccountId, Decimal>>;

// candidate -> supporters (id ascending), restricted to `wanted`.
std::map<AccountId, Supporters> index_supporters(const DailySnapshot& snapshot,
                                                 const std::map<AccountId, Decimal>& wanted,
                                                 const EngineConfig& cfg) {
    std::map<AccountId, Supporters> index;
    for (const auto& [account, power] : snapshot.power) {
        if (power <= Decimal{})
            continue;
        auto voter = resolve_direct_voter(snapshot.proxy, account, cfg.max_proxy_depth);
        if (!voter)
            continue;
        auto votes = snapshot.votes.find(*voter);
        if (votes == snapshot.votes.end())
            continue;
        for (const auto& candidate : votes->second)
            if (wanted.contains(candidate))
                index[candidate].emplace_back(account, power);
    }
    return index;
}

} // namespace

std::map<AccountId, Decimal> supportive_holders(const DailySnapshot& snapshot,
                                                const AccountId& candidate,
                                                const EngineConfig& cfg) {
    if (!snapshot.candidates.contains(candidate))
        throw Error(ErrorCode::UnregisteredCandidate, candidate.str());
    std::map<AccountId, Decimal> wanted{{candidate, Decimal{}}};
    auto index = index_supporters(snapshot, wanted, cfg);
    std::map<AccountId, Decimal> out;
    for (auto& [id, power] : index[candidate])
        out.emplace(id, power);
    return out;
}

DayAllocation allocate_dpos_day(const DailySnapshot& snapshot, const DailyProduction& production,
                                const EngineConfig& cfg) {
    if (snapshot.day != production.day)
        throw Error(ErrorCode::DayMismatch, "snapshot day " + std::to_string(snapshot.day) +
                                                " vs production day " +
                                                std::to_string(production.day));

    DayAllocation result;
    auto index = index_supporters(snapshot, production.produced, cfg);
    for (const auto& [producer, blocks] : production.produced) {
        if (blocks.is_zero())
            continue;
        auto it = index.find(producer);
        if (it == index.end() || !snapshot.candidates.contains(producer)) {
            result.residual += blocks;
            continue;
        }
        const auto& supporters = it->second;

        Decimal total_power;
        for (const auto& [id, power] : supporters)
            total_power += power;

        Decimal handed_out;
        const std::pair<AccountId, Decimal>* largest = nullptr;
        for (const auto& entry : supporters) {
            auto share = blocks.mul_div_floor(entry.second, total_power);
            result.allocated[entry.first] += share;
            handed_out += share;
            if (!largest || entry.second > largest->second)
                largest = &entry;
        }
        result.allocated[largest->first] += blocks - handed_out;
    }
    std::erase_if(result.allocated, [](const auto& kv) { return kv.second.is_zero(); });
    return result;
}

ImpactMatrix build_impact_matrix_dpos(std::span<const DailySnapshot> snapshots,
                                      std::span<const DailyProduction> productions,
                                      const EngineConfig& cfg, unsigned jobs) {
    if (snapshots.size() != productions.size())
        throw Error(ErrorCode::MisalignedDays, std::to_string(snapshots.size()) + " snapshots vs " +
                                                   std::to_string(productions.size()) +
                                                   " production days");
    for (std::size_t d = 0; d < snapshots.size(); ++d)
        if (snapshots[d].day != productions[d].day)
            throw Error(ErrorCode::MisalignedDays,
                        "position " + std::to_string(d) + ": snapshot day " +
                            std::to_string(snapshots[d].day) + " vs production day " +
                            std::to_string(productions[d].day));

    std::vector<std::map<AccountId, Decimal>> per_day(snapshots.size());
    detail::parallel_for(snapshots.size(), jobs, [&](std::size_t d) {
        per_day[d] = allocate_dpos_day(snapshots[d], productions[d], cfg).allocated;
    });
    return assemble_impact_matrix(per_day);
}

ImpactMatrix build_impact_matrix_pow(std::span<const ChainEvent> rewards,
                                     std::optional<DayIndex> horizon) {
    DayIndex last = 0;
    for (const auto& ev : rewards) {
        if (ev.kind != EventKind::ParticipantReward)
            throw Error(ErrorCode::WrongEventKind, std::string(to_string(ev.kind)));
        last = std::max(last, ev.day);
    }
    if (rewards.empty() && !horizon)
        return ImpactMatrix({}, 0);
    auto days = static_cast<std::size_t>(horizon.value_or(last)) + 1;
    if (!rewards.empty() && last >= days)
        throw Error(ErrorCode::MisalignedDays, "reward beyond horizon");

    std::vector<std::map<AccountId, Decimal>> per_day(days);
    for (const auto& ev : rewards)
        per_day[ev.day][ev.actor] += ev.amount.value_or(Decimal{});
    return assemble_impact_matrix(per_day);
}

} // namespace decent
