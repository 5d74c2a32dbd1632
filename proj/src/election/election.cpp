// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/election.hpp"

#include "decent/error.hpp"

#include <algorithm>
#include <utility>

namespace decent {

void EngineConfig::validate() const {
    if (committee_size < 1)
        throw Error(ErrorCode::InvalidConfig, "committee_size must be >= 1");
    if (max_proxy_depth < 1)
        throw Error(ErrorCode::InvalidConfig, "max_proxy_depth must be >= 1");
}

ElectionEngine::ElectionEngine(EngineConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void ElectionEngine::apply(const ChainEvent& ev) {
    const auto& actor = ev.actor;
    switch (ev.kind) {
    case EventKind::FreezeStake: {
        auto amount = ev.amount.value_or(Decimal{});
        auto next = ledger_.frozen[actor] + amount;
        ledger_.frozen[actor] = next;
        if (next.is_zero())
            ledger_.frozen.erase(actor);
        // Freezing draws on liquid funds first; any excess is treated as
        // funded from outside the ledger.
        if (auto it = ledger_.liquid.find(actor); it != ledger_.liquid.end()) {
            it->second -= std::min(it->second, amount);
            if (it->second.is_zero())
                ledger_.liquid.erase(it);
        }
        break;
    }
    case EventKind::UnfreezeStake: {
        auto amount = ev.amount.value_or(Decimal{});
        auto it = ledger_.frozen.find(actor);
        auto have = it == ledger_.frozen.end() ? Decimal{} : it->second;
        if (amount > have)
            throw Error(ErrorCode::InsufficientFrozenStake,
                        actor.str() + " unfreezes " + amount.to_string() + " of " +
                            have.to_string());
        if (amount.is_zero())
            break;
        if (amount == have)
            ledger_.frozen.erase(it);
        else
            it->second -= amount;

        auto per_tranche = Decimal::from_micros(amount.micros() / kWithdrawalTranches);
        auto& pending = ledger_.pending_withdrawals[actor];
        for (int k = 1; k <= kWithdrawalTranches; ++k) {
            auto part = k < kWithdrawalTranches ? per_tranche
                                                : amount - per_tranche * (kWithdrawalTranches - 1);
            pending.push_back({ev.day + static_cast<DayIndex>(k) * kTrancheIntervalDays, part});
        }
        break;
    }
    case EventKind::RegisterCandidate:
        election_.candidates.insert(actor);
        break;
    case EventKind::CastVote: {
        const auto& target = *ev.target;
        if (!election_.candidates.contains(target))
            throw Error(ErrorCode::UnregisteredCandidate, target.str());
        auto& set = election_.votes[actor];
        if (!set.contains(target) && set.size() >= kMaxVotesPerAccount) {
            throw Error(ErrorCode::VoteCapExceeded,
                        actor.str() + " already votes for " + std::to_string(set.size()));
        }
        set.insert(target);
        election_.proxy.erase(actor);
        break;
    }
    case EventKind::RetractVote: {
        if (auto it = election_.votes.find(actor); it != election_.votes.end()) {
            it->second.erase(*ev.target);
            if (it->second.empty())
                election_.votes.erase(it);
        }
        break;
    }
    case EventKind::SetProxy:
        if (*ev.target == actor)
            throw Error(ErrorCode::SelfProxy, actor.str());
        election_.proxy[actor] = *ev.target;
        election_.votes.erase(actor);
        break;
    case EventKind::ClearProxy:
        election_.proxy.erase(actor);
        break;
    case EventKind::BlockProduced:
    case EventKind::ParticipantReward:
        break;
    }
}

void ElectionEngine::release_matured(DayIndex day) {
    for (auto it = ledger_.pending_withdrawals.begin(); it != ledger_.pending_withdrawals.end();) {
        auto& tranches = it->second;
        Decimal released;
        std::erase_if(tranches, [&](const Tranche& t) {
            if (t.release_day > day)
                return false;
            released += t.amount;
            return true;
        });
        if (!released.is_zero())
            ledger_.liquid[it->first] += released;
        it = tranches.empty() ? ledger_.pending_withdrawals.erase(it) : std::next(it);
    }
}

DailySnapshot ElectionEngine::snapshot(DayIndex day) const {
    return make_snapshot(day, ledger_.frozen, election_.votes, election_.proxy,
                         election_.candidates, cfg_);
}

std::optional<AccountId> resolve_direct_voter(const ProxyMap& proxy, const AccountId& account,
                                              std::uint32_t max_depth) {
    const AccountId* current = &account;
    std::vector<const AccountId*> path{current};
    for (;;) {
        auto edge = proxy.find(*current);
        if (edge == proxy.end())
            return *current;
        if (path.size() > max_depth)
            return std::nullopt;
        current = &edge->second;
        for (const auto* seen : path)
            if (*seen == *current)
                return std::nullopt;
        path.push_back(current);
    }
}

std::optional<AccountId> resolve_direct_voter(const DailySnapshot& snapshot,
                                              const AccountId& account, const EngineConfig& cfg) {
    return resolve_direct_voter(snapshot.proxy, account, cfg.max_proxy_depth);
}

Decimal candidate_weight(const DailySnapshot& snapshot, const AccountId& candidate,
                         const EngineConfig& cfg) {
    if (!snapshot.candidates.contains(candidate))
        throw Error(ErrorCode::UnregisteredCandidate, candidate.str());
    Decimal weight;
    for (const auto& [account, power] : snapshot.power) {
        auto voter = resolve_direct_voter(snapshot.proxy, account, cfg.max_proxy_depth);
        if (!voter)
            continue;
        auto votes = snapshot.votes.find(*voter);
        if (votes != snapshot.votes.end() && votes->second.contains(candidate))
            weight += power;
    }
    return weight;
}

std::vector<CommitteeSeat> rank_candidates(const std::map<AccountId, Decimal>& power,
                                           const VoteMap& votes, const ProxyMap& proxy,
                                           const std::set<AccountId>& candidates,
                                           const EngineConfig& cfg) {
    std::map<AccountId, Decimal> weights;
    for (const auto& c : candidates)
        weights.emplace(c, Decimal{});

    for (const auto& [account, amount] : power) {
        if (amount.is_zero())
            continue;
        auto voter = resolve_direct_voter(proxy, account, cfg.max_proxy_depth);
        if (!voter)
            continue;
        auto it = votes.find(*voter);
        if (it == votes.end())
            continue;
        for (const auto& c : it->second)
            if (auto w = weights.find(c); w != weights.end())
                w->second += amount;
    }

    std::vector<CommitteeSeat> ranked;
    ranked.reserve(weights.size());
    for (auto& [id, w] : weights)
        ranked.push_back({id, w});
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const CommitteeSeat& a, const CommitteeSeat& b) {
                         return a.weight > b.weight;
                     });
    return ranked;
}

DailySnapshot make_snapshot(DayIndex day, std::map<AccountId, Decimal> power, VoteMap votes,
                            ProxyMap proxy, std::set<AccountId> candidates,
                            const EngineConfig& cfg) {
    DailySnapshot snap;
    snap.day = day;
    snap.committee = rank_candidates(power, votes, proxy, candidates, cfg);
    std::erase_if(snap.committee, [](const CommitteeSeat& s) { return s.weight.is_zero(); });
    if (snap.committee.size() > cfg.committee_size)
        snap.committee.resize(cfg.committee_size);
    snap.power = std::move(power);
    snap.votes = std::move(votes);
    snap.proxy = std::move(proxy);
    snap.candidates = std::move(candidates);
    return snap;
}

void replay(const EventLog& log, const EngineConfig& cfg,
            const std::function<void(const DailySnapshot&)>& sink) {
    ElectionEngine engine(cfg);
    std::size_t next = 0;
    for (DayIndex day = 0;; ++day) {
        while (next < log.events.size() && log.events[next].day == day)
            engine.apply(log.events[next++]);
        engine.release_matured(day);
        sink(engine.snapshot(day));
        if (day >= log.horizon && next >= log.events.size())
            break;
    }
}

std::vector<DailySnapshot> replay_snapshots(const EventLog& log, const EngineConfig& cfg) {
    std::vector<DailySnapshot> out;
    replay(log, cfg, [&](const DailySnapshot& s) { out.push_back(s); });
    return out;
}

namespace {

void append_decimal_string(std::string& out, Decimal d) {
    out += '"';
    out += d.to_string();
    out += '"';
}

void append_id(std::string& out, const AccountId& id) {
    out += '"';
    out += id.str();
    out += '"';
}

} // namespace

std::string snapshot_to_json(const DailySnapshot& s) {
    std::string out = "{\"day\":" + std::to_string(s.day) + ",\"power\":{";
    bool first = true;
    for (const auto& [id, p] : s.power) {
        if (!std::exchange(first, false))
            out += ',';
        append_id(out, id);
        out += ':';
        append_decimal_string(out, p);
    }
    out += "},\"votes\":{";
    first = true;
    for (const auto& [id, set] : s.votes) {
        if (!std::exchange(first, false))
            out += ',';
        append_id(out, id);
        out += ":[";
        bool inner = true;
        for (const auto& c : set) {
            if (!std::exchange(inner, false))
                out += ',';
            append_id(out, c);
        }
        out += ']';
    }
    out += "},\"proxy\":{";
    first = true;
    for (const auto& [from, to] : s.proxy) {
        if (!std::exchange(first, false))
            out += ',';
        append_id(out, from);
        out += ':';
        append_id(out, to);
    }
    out += "},\"committee\":[";
    first = true;
    for (const auto& seat : s.committee) {
        if (!std::exchange(first, false))
            out += ',';
        out += '[';
        append_id(out, seat.id);
        out += ',';
        append_decimal_string(out, seat.weight);
        out += ']';
    }
    out += "]}";
    return out;
}

} // namespace decent
