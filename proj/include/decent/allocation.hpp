// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/decimal.hpp"
#include "decent/election.hpp"
#include "decent/event.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace decent {

struct DailyProduction {
    DayIndex day = 0;
    std::map<AccountId, Decimal> produced;

    bool operator==(const DailyProduction&) const = default;
};

/// Per-day BlockProduced totals for every day in [0, log.horizon].
std::vector<DailyProduction> extract_production(const EventLog& log);

/// Individual-by-day impact. Rows are individuals, columns days; storage is
/// column-major so a day's column is one contiguous micro-unit span.
class ImpactMatrix {
public:
    ImpactMatrix() = default;
    ImpactMatrix(std::vector<AccountId> individuals, std::size_t days);

    const std::vector<AccountId>& individuals() const noexcept { return individuals_; }
    std::size_t rows() const noexcept { return individuals_.size(); }
    std::size_t days() const noexcept { return days_; }

    Decimal at(std::size_t row, std::size_t day) const;
    /// Throws Error{InvalidDecimal} for negative values.
    void set(std::size_t row, std::size_t day, Decimal value);

    std::span<const std::int64_t> column_micros(std::size_t day) const;
    Decimal column_total(std::size_t day) const;
    Decimal row_total(std::size_t row) const;

    bool operator==(const ImpactMatrix&) const = default;

private:
    std::vector<AccountId> individuals_;
    std::size_t days_ = 0;
    std::vector<std::int64_t> micros_;
};

/// Orders individuals by total descending then id, dropping all-zero rows.
ImpactMatrix assemble_impact_matrix(std::span<const std::map<AccountId, Decimal>> per_day);

/// Accounts with positive power whose direct voter votes for `candidate`.
/// Throws Error{UnregisteredCandidate}.
std::map<AccountId, Decimal> supportive_holders(const DailySnapshot& snapshot,
                                                const AccountId& candidate,
                                                const EngineConfig& cfg = {});

struct DayAllocation {
    std::map<AccountId, Decimal> allocated;
    /// Blocks from producers with no supportive power.
    Decimal residual;

    bool operator==(const DayAllocation&) const = default;
};

/// Splits each producer's blocks over its supporters pro rata to power,
/// flooring at micro precision; the per-producer remainder goes to the
/// largest supporter (lowest id on ties). Zero shares are omitted.
/// Throws Error{DayMismatch}.
DayAllocation allocate_dpos_day(const DailySnapshot& snapshot, const DailyProduction& production,
                                const EngineConfig& cfg = {});

/// Throws Error{MisalignedDays}. `jobs` > 1 allocates days concurrently;
/// the result does not depend on it.
ImpactMatrix build_impact_matrix_dpos(std::span<const DailySnapshot> snapshots,
                                      std::span<const DailyProduction> productions,
                                      const EngineConfig& cfg = {}, unsigned jobs = 1);

/// Column count is horizon + 1 (default: last reward day + 1).
/// Throws Error{WrongEventKind}.
ImpactMatrix build_impact_matrix_pow(std::span<const ChainEvent> rewards,
                                     std::optional<DayIndex> horizon = std::nullopt);

} // namespace decent
