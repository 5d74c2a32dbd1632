// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/allocation.hpp"
#include "decent/election.hpp"
#include "decent/event.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace decent {

/// 24 * 60 * 60 / 3: one block every three seconds.
inline constexpr std::uint32_t kSlotsPerDay = 28'800;

enum class SynthMode { Dpos, Pow };

/// In Pow mode `holders` counts pool participants and `candidates` counts
/// pools; proxy/revote/committee settings are ignored.
struct SynthConfig {
    SynthMode mode = SynthMode::Dpos;
    std::uint32_t holders = 100;
    std::uint32_t candidates = 30;
    std::uint32_t days = 30;
    double stake_zipf_s = 1.0;
    double proxy_prob = 0.1;
    double revote_prob = 0.05;
    std::uint32_t committee_size = 21;
    std::uint64_t seed = 1;

    /// Throws Error{InvalidConfig}.
    void validate() const;
    /// Canonical one-line JSON, fixed key order.
    std::string to_json() const;
    /// Missing keys keep their defaults; unknown keys throw InvalidConfig.
    static SynthConfig from_json(std::string_view text);

    bool operator==(const SynthConfig&) const = default;
};

/// Deterministic synthetic log. DPoS: day 0 registers every candidate,
/// freezes Zipf-ranked stake (rank^-s) for every holder and casts initial
/// votes, or sets a proxy to a strictly higher-ranked holder; later days
/// carry revotes; every day with a committee carries its BlockProduced
/// records. Pow: per-day pool blocks drawn from a Zipf share and Zipf
/// participant rewards.
EventLog generate_chain(const SynthConfig& cfg);

/// Deals kSlotsPerDay slots in rounds of |committee|, each round a seeded
/// shuffle. Throws Error{EmptyCommittee}.
DailyProduction simulate_production(std::span<const AccountId> committee, DayIndex day,
                                    const SynthConfig& cfg);

/// JSONL text with the leading "#cfg:{...}" line used for fixtures.
std::string render_fixture(const SynthConfig& cfg, const EventLog& log);

namespace oracle {

inline constexpr std::size_t kMaxSubsetValues = 20;

/// Exhaustive minimum subset size with sum strictly greater than
/// `threshold`; values.size() + 1 when no subset qualifies.
/// Throws Error{TooLarge} above kMaxSubsetValues values.
std::size_t min_subset(std::span<const Decimal> values, Decimal threshold);

/// Same search against share * sum(values), compared exactly.
std::size_t min_subset_share(std::span<const Decimal> values, Decimal share);

/// Straightforward re-derivation of the DPoS block split: walks each
/// holder's proxy chain, filters voters of each producer, and splits with
/// the same floor-and-largest-remainder rounding. For tests only.
std::map<AccountId, Decimal> allocation(const DailySnapshot& snapshot,
                                        const DailyProduction& production,
                                        std::uint32_t max_proxy_depth = 16);

} // namespace oracle

} // namespace decent
