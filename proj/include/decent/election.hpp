// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/decimal.hpp"
#include "decent/event.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace decent {

inline constexpr std::size_t kMaxVotesPerAccount = 30;
inline constexpr int kWithdrawalTranches = 13;
inline constexpr DayIndex kTrancheIntervalDays = 7;

struct EngineConfig {
    std::uint32_t committee_size = 21;
    std::uint32_t max_proxy_depth = 16;

    /// Throws Error{InvalidConfig}.
    void validate() const;
};

struct Tranche {
    DayIndex release_day = 0;
    Decimal amount;

    bool operator==(const Tranche&) const = default;
};

struct StakeLedger {
    // Zero balances are erased, so absence means zero.
    std::map<AccountId, Decimal> frozen;
    std::map<AccountId, std::vector<Tranche>> pending_withdrawals;
    std::map<AccountId, Decimal> liquid;

    bool operator==(const StakeLedger&) const = default;
};

using VoteMap = std::map<AccountId, std::set<AccountId>>;
using ProxyMap = std::map<AccountId, AccountId>;

struct ElectionState {
    VoteMap votes;
    ProxyMap proxy;
    std::set<AccountId> candidates;

    bool operator==(const ElectionState&) const = default;
};

struct CommitteeSeat {
    AccountId id;
    Decimal weight;

    bool operator==(const CommitteeSeat&) const = default;
};

struct DailySnapshot {
    DayIndex day = 0;
    std::map<AccountId, Decimal> power;
    VoteMap votes;
    ProxyMap proxy;
    std::set<AccountId> candidates;
    std::vector<CommitteeSeat> committee;

    bool operator==(const DailySnapshot&) const = default;
};

/// Stateful fold over governance events. apply() checks every precondition
/// before touching state, so a throwing call leaves the engine unchanged.
class ElectionEngine {
public:
    explicit ElectionEngine(EngineConfig cfg = {});

    /// Throws Error{InsufficientFrozenStake | VoteCapExceeded |
    /// UnregisteredCandidate | SelfProxy}.
    void apply(const ChainEvent& event);

    /// Moves every withdrawal tranche with release_day <= day to liquid.
    void release_matured(DayIndex day);

    DailySnapshot snapshot(DayIndex day) const;

    const StakeLedger& ledger() const noexcept { return ledger_; }
    const ElectionState& election() const noexcept { return election_; }
    const EngineConfig& config() const noexcept { return cfg_; }

private:
    EngineConfig cfg_;
    StakeLedger ledger_;
    ElectionState election_;
};

/// Follows proxy edges to the account that casts the effective votes.
/// Returns nullopt on a cycle or when more than max_depth edges would be
/// followed; such accounts support nobody.
std::optional<AccountId> resolve_direct_voter(const ProxyMap& proxy, const AccountId& account,
                                              std::uint32_t max_depth);
std::optional<AccountId> resolve_direct_voter(const DailySnapshot& snapshot,
                                              const AccountId& account, const EngineConfig& cfg);

/// Sum of power[x] over every x whose direct voter votes for `candidate`.
/// Throws Error{UnregisteredCandidate}.
Decimal candidate_weight(const DailySnapshot& snapshot, const AccountId& candidate,
                         const EngineConfig& cfg);

/// Every registered candidate, weight descending then id ascending.
std::vector<CommitteeSeat> rank_candidates(const std::map<AccountId, Decimal>& power,
                                           const VoteMap& votes, const ProxyMap& proxy,
                                           const std::set<AccountId>& candidates,
                                           const EngineConfig& cfg);

/// Builds a snapshot from its parts; committee = top committee_size ranked
/// candidates with positive weight.
DailySnapshot make_snapshot(DayIndex day, std::map<AccountId, Decimal> power, VoteMap votes,
                            ProxyMap proxy, std::set<AccountId> candidates,
                            const EngineConfig& cfg);

/// Replays the log and calls `sink` once per day in [0, horizon] with the
/// end-of-day state. Throws on the first event replay rejects.
void replay(const EventLog& log, const EngineConfig& cfg,
            const std::function<void(const DailySnapshot&)>& sink);
std::vector<DailySnapshot> replay_snapshots(const EventLog& log, const EngineConfig& cfg);

/// {day, power:{id:decimal}, votes:{id:[id]}, proxy:{id:id},
///  committee:[[id,decimal]]} on one line.
std::string snapshot_to_json(const DailySnapshot& snapshot);

} // namespace decent
