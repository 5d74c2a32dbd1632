// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/synth.hpp"

#include "decent/error.hpp"
#include "decent/event_log.hpp"
#include "decent/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace decent {

namespace {

enum Stream : std::uint64_t {
    kSetupStream = 1,
    kRevoteStream = 2,
    kProductionStream = 3,
    kPoolStream = 4,
    kRewardStream = 5,
};

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

std::string padded(char prefix, std::size_t index, std::size_t width) {
    auto digits = std::to_string(index);
    if (digits.size() < width)
        digits.insert(0, width - digits.size(), '0');
    return prefix + digits;
}

std::size_t id_width(std::size_t count, std::size_t minimum) {
    return std::max(minimum, std::to_string(count > 0 ? count - 1 : 0).size());
}

// amount = scale * rank^-s at micro precision, never below one micro-unit.
Decimal zipf_amount(double scale, std::size_t rank, double s) {
    double value = scale * std::pow(static_cast<double>(rank), -s);
    auto micros = std::llround(value * static_cast<double>(Decimal::kScale));
    return Decimal::from_micros(std::max<long long>(micros, 1));
}

class LogBuilder {
public:
    void push(DayIndex day, EventKind kind, const AccountId& actor,
              std::optional<AccountId> target = {}, std::optional<Decimal> amount = {}) {
        if (day != day_) {
            day_ = day;
            seq_ = 0;
        }
        log_.events.push_back({day, seq_++, kind, actor, std::move(target), amount});
        log_.horizon = day;
    }
    EventLog take() { return std::move(log_); }
    const ChainEvent& back() const { return log_.events.back(); }

private:
    EventLog log_;
    DayIndex day_ = 0;
    std::uint64_t seq_ = 0;
};

std::vector<std::size_t> pick_distinct(Rng& rng, std::size_t population, std::size_t count) {
    std::vector<std::size_t> pool(population);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < count; ++i) {
        auto j = i + rng.below(population - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

EventLog generate_dpos(const SynthConfig& cfg) {
    auto hw = id_width(cfg.holders, 4);
    auto cw = id_width(cfg.candidates, 3);
    std::vector<AccountId> holders, candidates;
    for (std::size_t i = 0; i < cfg.holders; ++i)
        holders.emplace_back(padded('h', i, hw));
    for (std::size_t i = 0; i < cfg.candidates; ++i)
        candidates.emplace_back(padded('c', i, cw));

    const std::size_t vote_count = std::min<std::size_t>(
        {kMaxVotesPerAccount, cfg.committee_size, cfg.candidates});

    EngineConfig engine_cfg;
    engine_cfg.committee_size = cfg.committee_size;
    ElectionEngine engine(engine_cfg);
    LogBuilder builder;
    auto emit = [&](DayIndex day, EventKind kind, const AccountId& actor,
                    std::optional<AccountId> target = {}, std::optional<Decimal> amount = {}) {
        builder.push(day, kind, actor, std::move(target), amount);
        engine.apply(builder.back());
    };
    auto cast_fresh_votes = [&](Rng& rng, DayIndex day, const AccountId& holder) {
        for (auto idx : pick_distinct(rng, candidates.size(), vote_count))
            emit(day, EventKind::CastVote, holder, candidates[idx]);
    };

    Rng setup(derive_seed(cfg.seed, kSetupStream, 0));
    for (const auto& c : candidates)
        emit(0, EventKind::RegisterCandidate, c);
    for (std::size_t i = 0; i < holders.size(); ++i)
        emit(0, EventKind::FreezeStake, holders[i], std::nullopt,
             zipf_amount(1000.0, i + 1, cfg.stake_zipf_s));
    for (std::size_t i = 0; i < holders.size(); ++i) {
        // Proxies only point at higher-ranked (lower index) holders, which
        // keeps every chain acyclic.
        if (i > 0 && setup.chance(cfg.proxy_prob))
            emit(0, EventKind::SetProxy, holders[i], holders[setup.below(i)]);
        else
            cast_fresh_votes(setup, 0, holders[i]);
    }

    for (DayIndex day = 0; day < cfg.days; ++day) {
        if (day > 0) {
            Rng rng(derive_seed(cfg.seed, kRevoteStream, day));
            for (const auto& holder : holders) {
                if (!rng.chance(cfg.revote_prob))
                    continue;
                if (engine.election().proxy.contains(holder))
                    emit(day, EventKind::ClearProxy, holder);
                if (auto it = engine.election().votes.find(holder);
                    it != engine.election().votes.end()) {
                    auto current = it->second;
                    for (const auto& c : current)
                        emit(day, EventKind::RetractVote, holder, c);
                }
                cast_fresh_votes(rng, day, holder);
            }
        }

        auto ranked = rank_candidates(engine.ledger().frozen, engine.election().votes,
                                      engine.election().proxy, engine.election().candidates,
                                      engine_cfg);
        std::vector<AccountId> committee;
        for (const auto& seat : ranked) {
            if (committee.size() >= cfg.committee_size || seat.weight.is_zero())
                break;
            committee.push_back(seat.id);
        }
        if (committee.empty())
            continue;
        auto production = simulate_production(committee, day, cfg);
        for (const auto& [producer, blocks] : production.produced)
            emit(day, EventKind::BlockProduced, producer, std::nullopt, blocks);
    }
    return builder.take();
}

EventLog generate_pow(const SynthConfig& cfg) {
    auto pw = id_width(cfg.candidates, 3);
    auto uw = id_width(cfg.holders, 4);
    std::vector<AccountId> pools, participants;
    for (std::size_t i = 0; i < cfg.candidates; ++i)
        pools.emplace_back(padded('p', i, pw));
    for (std::size_t i = 0; i < cfg.holders; ++i)
        participants.emplace_back(padded('u', i, uw));

    std::vector<double> cumulative(pools.size());
    double running = 0.0;
    for (std::size_t r = 0; r < pools.size(); ++r) {
        running += std::pow(static_cast<double>(r + 1), -cfg.stake_zipf_s);
        cumulative[r] = running;
    }

    LogBuilder builder;
    for (DayIndex day = 0; day < cfg.days; ++day) {
        Rng slots(derive_seed(cfg.seed, kPoolStream, day));
        std::vector<std::uint32_t> counts(pools.size(), 0);
        for (std::uint32_t s = 0; s < kSlotsPerDay; ++s) {
            double u = slots.uniform() * running;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            auto idx = std::min<std::size_t>(it - cumulative.begin(), pools.size() - 1);
            ++counts[idx];
        }
        for (std::size_t p = 0; p < pools.size(); ++p)
            if (counts[p] > 0)
                builder.push(day, EventKind::BlockProduced, pools[p], std::nullopt,
                             Decimal::from_units(counts[p]));

        Rng rewards(derive_seed(cfg.seed, kRewardStream, day));
        for (std::size_t i = 0; i < participants.size(); ++i) {
            double jitter = 0.5 + rewards.uniform();
            auto pool = pools[rewards.below(pools.size())];
            builder.push(day, EventKind::ParticipantReward, participants[i], pool,
                         zipf_amount(10.0 * jitter, i + 1, cfg.stake_zipf_s));
        }
    }
    return builder.take();
}

} // namespace

void SynthConfig::validate() const {
    auto fail = [](const std::string& why) { return Error(ErrorCode::InvalidConfig, why); };
    if (holders < 1)
        throw fail("holders must be >= 1");
    if (candidates < 1)
        throw fail("candidates must be >= 1");
    if (committee_size < 1)
        throw fail("committee_size must be >= 1");
    if (!std::isfinite(stake_zipf_s) || stake_zipf_s < 0.0)
        throw fail("stake_zipf_s must be >= 0");
    if (!is_probability(proxy_prob))
        throw fail("proxy_prob must be in [0,1]");
    if (!is_probability(revote_prob))
        throw fail("revote_prob must be in [0,1]");
}

std::string SynthConfig::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = mode == SynthMode::Dpos ? "dpos" : "pow";
    j["holders"] = holders;
    j["candidates"] = candidates;
    j["days"] = days;
    j["stake_zipf_s"] = stake_zipf_s;
    j["proxy_prob"] = proxy_prob;
    j["revote_prob"] = revote_prob;
    j["committee_size"] = committee_size;
    j["seed"] = seed;
    return j.dump();
}

SynthConfig SynthConfig::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, e.what());
    }
    if (!j.is_object())
        throw Error(ErrorCode::InvalidConfig, "synth config must be an object");

    SynthConfig cfg;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "mode") {
                auto m = value.get<std::string>();
                if (m != "dpos" && m != "pow")
                    throw Error(ErrorCode::InvalidConfig, "mode must be dpos or pow");
                cfg.mode = m == "dpos" ? SynthMode::Dpos : SynthMode::Pow;
            } else if (key == "holders") {
                cfg.holders = value.get<std::uint32_t>();
            } else if (key == "candidates") {
                cfg.candidates = value.get<std::uint32_t>();
            } else if (key == "days") {
                cfg.days = value.get<std::uint32_t>();
            } else if (key == "stake_zipf_s") {
                cfg.stake_zipf_s = value.get<double>();
            } else if (key == "proxy_prob") {
                cfg.proxy_prob = value.get<double>();
            } else if (key == "revote_prob") {
                cfg.revote_prob = value.get<double>();
            } else if (key == "committee_size") {
                cfg.committee_size = value.get<std::uint32_t>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else {
                throw Error(ErrorCode::InvalidConfig, "unknown synth key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, e.what());
    }
    return cfg;
}

EventLog generate_chain(const SynthConfig& cfg) {
    cfg.validate();
    return cfg.mode == SynthMode::Dpos ? generate_dpos(cfg) : generate_pow(cfg);
}

DailyProduction simulate_production(std::span<const AccountId> committee, DayIndex day,
                                    const SynthConfig& cfg) {
    if (committee.empty())
        throw Error(ErrorCode::EmptyCommittee, "day " + std::to_string(day));

    Rng rng(derive_seed(cfg.seed, kProductionStream, day));
    const std::size_t n = committee.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::int64_t> blocks(n, 0);

    for (std::uint32_t slot = 0; slot < kSlotsPerDay; slot += static_cast<std::uint32_t>(n)) {
        for (std::size_t i = n; i > 1; --i)
            std::swap(order[i - 1], order[rng.below(i)]);
        auto take = std::min<std::size_t>(n, kSlotsPerDay - slot);
        for (std::size_t k = 0; k < take; ++k)
            ++blocks[order[k]];
    }

    DailyProduction out;
    out.day = day;
    for (std::size_t i = 0; i < n; ++i)
        out.produced[committee[i]] += Decimal::from_units(blocks[i]);
    return out;
}

std::string render_fixture(const SynthConfig& cfg, const EventLog& log) {
    return "#cfg:" + cfg.to_json() + "\n" + serialize_event_log(log);
}

} // namespace decent
