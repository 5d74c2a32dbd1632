// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/allocation.hpp"
#include "decent/error.hpp"
#include "decent/rng.hpp"
#include "decent/synth.hpp"

#include "support/random_snapshot.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace decent {
namespace {

using Powers = std::vector<std::pair<std::string, std::int64_t>>;
using Edges = std::vector<std::pair<std::string, std::string>>;
using Ballots = std::vector<std::pair<std::string, std::vector<std::string>>>;

DailySnapshot build(const Powers& powers, const Edges& edges, const Ballots& ballots,
                    std::vector<std::string> candidates, DayIndex day = 0) {
    std::map<AccountId, Decimal> power;
    for (const auto& [who, units] : powers)
        power[AccountId(who)] = Decimal::from_units(units);
    ProxyMap proxy;
    for (const auto& [from, to] : edges)
        proxy[AccountId(from)] = AccountId(to);
    VoteMap votes;
    for (const auto& [who, picks] : ballots)
        for (const auto& c : picks)
            votes[AccountId(who)].insert(AccountId(c));
    std::set<AccountId> cands;
    for (const auto& c : candidates)
        cands.insert(AccountId(c));
    return make_snapshot(day, power, votes, proxy, cands, {});
}

DailyProduction produce(std::vector<std::pair<std::string, std::int64_t>> blocks, DayIndex day = 0) {
    DailyProduction p;
    p.day = day;
    for (const auto& [who, units] : blocks)
        p.produced[AccountId(who)] = Decimal::from_units(units);
    return p;
}

std::map<AccountId, Decimal> units(std::vector<std::pair<std::string, std::int64_t>> list) {
    std::map<AccountId, Decimal> out;
    for (const auto& [who, n] : list)
        out[AccountId(who)] = Decimal::from_units(n);
    return out;
}

Decimal sum(const std::map<AccountId, Decimal>& m) {
    Decimal total;
    for (const auto& [_, v] : m)
        total += v;
    return total;
}

TEST(SupportiveHolders, Nobody) {
    auto snap = build({{"a", 1}}, {}, {}, {"c"});
    EXPECT_TRUE(supportive_holders(snap, AccountId("c")).empty());
}

TEST(SupportiveHolders, ProxyFollowed) {
    auto snap = build({{"h", 2}, {"a", 1}}, {{"a", "h"}}, {{"h", {"c"}}}, {"c"});
    EXPECT_EQ(supportive_holders(snap, AccountId("c")), units({{"h", 2}, {"a", 1}}));
}

TEST(SupportiveHolders, CycleDropsBoth) {
    auto snap = build({{"a", 1}, {"b", 1}}, {{"a", "b"}, {"b", "a"}}, {{"b", {"c"}}}, {"c"});
    EXPECT_TRUE(supportive_holders(snap, AccountId("c")).empty());
}

TEST(SupportiveHolders, UnregisteredThrows) {
    auto snap = build({{"a", 1}}, {}, {}, {"c"});
    EXPECT_THROW(supportive_holders(snap, AccountId("z")), Error);
}

TEST(SupportiveHolders, SumsToCandidateWeight) {
    Rng rng(4);
    EngineConfig cfg;
    for (int trial = 0; trial < 100; ++trial) {
        auto snap = testing::random_snapshot(rng, {}, cfg);
        for (const auto& c : snap.candidates)
            EXPECT_EQ(sum(supportive_holders(snap, c, cfg)), candidate_weight(snap, c, cfg));
    }
}

DailySnapshot six_supporters() {
    return build({{"a", 1}, {"b", 1}, {"c", 1}, {"i", 1}, {"d", 3}, {"e", 3}}, {},
                 {{"a", {"c"}}, {"b", {"c"}}, {"c", {"c"}}, {"i", {"c"}}, {"d", {"c"}}, {"e", {"c"}}},
                 {"c"});
}

TEST(AllocateDay, ProportionalSplit) {
    auto got = allocate_dpos_day(six_supporters(), produce({{"c", 10}}));
    EXPECT_EQ(got.allocated, units({{"a", 1}, {"b", 1}, {"c", 1}, {"i", 1}, {"d", 3}, {"e", 3}}));
    EXPECT_TRUE(got.residual.is_zero());
}

TEST(AllocateDay, ZeroSupportIsResidual) {
    auto snap = build({{"a", 1}}, {}, {}, {"c"});
    auto got = allocate_dpos_day(snap, produce({{"c", 5}}));
    EXPECT_TRUE(got.allocated.empty());
    EXPECT_EQ(got.residual, Decimal::from_units(5));
}

TEST(AllocateDay, SumsOverProducers) {
    auto snap = build({{"x", 3}}, {}, {{"x", {"p", "q"}}}, {"p", "q"});
    auto got = allocate_dpos_day(snap, produce({{"p", 6}, {"q", 6}}));
    EXPECT_EQ(got.allocated, units({{"x", 12}}));
}

TEST(AllocateDay, RemainderToLargestHolder) {
    // 1 block over powers 1,1,1: floor gives 0.333333 each, 0.000001 spare.
    auto snap = build({{"a", 1}, {"b", 1}, {"c", 1}}, {},
                      {{"a", {"p"}}, {"b", {"p"}}, {"c", {"p"}}}, {"p"});
    auto got = allocate_dpos_day(snap, produce({{"p", 1}}));
    EXPECT_EQ(got.allocated.at(AccountId("a")).to_string(), "0.333334");
    EXPECT_EQ(got.allocated.at(AccountId("b")).to_string(), "0.333333");
    EXPECT_EQ(got.allocated.at(AccountId("c")).to_string(), "0.333333");
}

TEST(AllocateDay, DayMismatch) {
    try {
        allocate_dpos_day(six_supporters(), produce({{"c", 1}}, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DayMismatch);
    }
}

// The worked example: two producers, proxy chains of mixed depth.
TEST(AllocateDay, TwelveAccountExample) {
    auto snap = build({{"a", 1}, {"b", 1}, {"c", 1}, {"i", 1}, {"g", 2}, {"j", 2}, {"d", 3}, {"e", 3}},
                      {{"a", "d"}, {"d", "h"}, {"b", "i"}, {"c", "i"}, {"e", "i"}, {"f", "i"}, {"g", "j"}},
                      {{"h", {"k"}}, {"i", {"k", "l"}}, {"j", {"l"}}}, {"k", "l"});
    auto got = allocate_dpos_day(snap, produce({{"k", 10}, {"l", 10}}));
    EXPECT_EQ(got.allocated,
              units({{"a", 1}, {"b", 2}, {"c", 2}, {"d", 3}, {"e", 6}, {"g", 2}, {"i", 2}, {"j", 2}}));
    EXPECT_EQ(sum(got.allocated), Decimal::from_units(20));
}

TEST(Oracle, MirrorsDayExamples) {
    EXPECT_EQ(oracle::allocation(six_supporters(), produce({{"c", 10}})),
              allocate_dpos_day(six_supporters(), produce({{"c", 10}})).allocated);
    auto lonely = build({{"a", 1}}, {}, {}, {"c"});
    EXPECT_TRUE(oracle::allocation(lonely, produce({{"c", 5}})).empty());
    auto single = build({{"x", 3}}, {}, {{"x", {"p", "q"}}}, {"p", "q"});
    EXPECT_EQ(oracle::allocation(single, produce({{"p", 6}, {"q", 6}})), units({{"x", 12}}));
    auto broke = build({}, {}, {{"x", {"p"}}}, {"p"});
    EXPECT_TRUE(oracle::allocation(broke, produce({{"p", 6}})).empty());
}

TEST(Properties, ConservationAndOracleAgreement) {
    Rng rng(2024);
    EngineConfig cfg;
    for (int trial = 0; trial < 300; ++trial) {
        auto snap = testing::random_snapshot(rng, {}, cfg);
        auto production = testing::random_production(rng, snap);
        auto got = allocate_dpos_day(snap, production, cfg);
        EXPECT_EQ(sum(got.allocated) + got.residual, sum(production.produced));
        EXPECT_EQ(got.allocated, oracle::allocation(snap, production, cfg.max_proxy_depth));
    }
}

TEST(Properties, ScaleEquivariance) {
    Rng rng(9);
    EngineConfig cfg;
    for (int trial = 0; trial < 200; ++trial) {
        auto snap = testing::random_snapshot(rng, {}, cfg);
        auto production = testing::random_production(rng, snap);
        auto factor = static_cast<std::int64_t>(2 + rng.below(1000));
        auto power = snap.power;
        for (auto& [_, p] : power)
            p = p * factor;
        auto scaled = make_snapshot(0, power, snap.votes, snap.proxy, snap.candidates, cfg);
        EXPECT_EQ(allocate_dpos_day(snap, production, cfg),
                  allocate_dpos_day(scaled, production, cfg));
    }
}

TEST(Properties, MonotoneInOwnPower) {
    Rng rng(10);
    EngineConfig cfg;
    for (int trial = 0; trial < 200; ++trial) {
        auto snap = testing::random_snapshot(rng, {}, cfg);
        auto production = testing::random_production(rng, snap);
        if (snap.power.empty())
            continue;
        auto it = snap.power.begin();
        std::advance(it, rng.below(snap.power.size()));
        auto holder = it->first;
        auto power = snap.power;
        power[holder] += Decimal::from_micros(1 + static_cast<std::int64_t>(rng.below(1'000'000'000)));
        auto boosted = make_snapshot(0, power, snap.votes, snap.proxy, snap.candidates, cfg);
        // per producer, so remainder effects cannot mask a decrease
        for (const auto& [producer, blocks] : production.produced) {
            DailyProduction one{0, {{producer, blocks}}};
            auto before = allocate_dpos_day(snap, one, cfg).allocated;
            auto after = allocate_dpos_day(boosted, one, cfg).allocated;
            auto b = before.contains(holder) ? before.at(holder) : Decimal{};
            auto a = after.contains(holder) ? after.at(holder) : Decimal{};
            EXPECT_GE(a, b);
        }
    }
}

TEST(Properties, EndToEndProxyTransparency) {
    Rng rng(12);
    EngineConfig cfg;
    cfg.max_proxy_depth = 1000;
    for (int trial = 0; trial < 100; ++trial) {
        auto snap = testing::random_snapshot(rng, {}, cfg);
        auto production = testing::random_production(rng, snap);
        if (snap.proxy.empty())
            continue;
        auto edge = snap.proxy.begin();
        std::advance(edge, rng.below(snap.proxy.size()));
        auto proxy = snap.proxy;
        proxy[edge->first] = AccountId("pass-through");
        proxy[AccountId("pass-through")] = edge->second;
        auto altered = make_snapshot(0, snap.power, snap.votes, proxy, snap.candidates, cfg);
        std::vector<DailySnapshot> a{snap}, b{altered};
        std::vector<DailyProduction> p{production};
        EXPECT_EQ(build_impact_matrix_dpos(a, p, cfg), build_impact_matrix_dpos(b, p, cfg));
    }
}

TEST(ImpactMatrixDpos, OneByOne) {
    auto snap = build({{"x", 2}}, {}, {{"x", {"c"}}}, {"c"});
    std::vector<DailySnapshot> s{snap};
    std::vector<DailyProduction> p{produce({{"c", 4}})};
    auto m = build_impact_matrix_dpos(s, p);
    ASSERT_EQ(m.rows(), 1u);
    ASSERT_EQ(m.days(), 1u);
    EXPECT_EQ(m.at(0, 0), Decimal::from_units(4));
}

TEST(ImpactMatrixDpos, RowOrdering) {
    std::vector<DailySnapshot> s{six_supporters()};
    std::vector<DailyProduction> p{produce({{"c", 10}})};
    auto m = build_impact_matrix_dpos(s, p);
    std::vector<AccountId> expected;
    for (auto* id : {"d", "e", "a", "b", "c", "i"})
        expected.emplace_back(id);
    EXPECT_EQ(m.individuals(), expected);
    EXPECT_EQ(m.row_total(0), Decimal::from_units(3));
    EXPECT_EQ(m.row_total(5), Decimal::from_units(1));
}

TEST(ImpactMatrixDpos, NoProductionNoRows) {
    std::vector<DailySnapshot> s{six_supporters()};
    std::vector<DailyProduction> p{produce({})};
    auto m = build_impact_matrix_dpos(s, p);
    EXPECT_EQ(m.rows(), 0u);
    EXPECT_EQ(m.days(), 1u);
}

TEST(ImpactMatrixDpos, Misaligned) {
    std::vector<DailySnapshot> s{six_supporters()};
    std::vector<DailyProduction> none;
    std::vector<DailyProduction> shifted{produce({}, 1)};
    EXPECT_THROW(build_impact_matrix_dpos(s, none), Error);
    EXPECT_THROW(build_impact_matrix_dpos(s, shifted), Error);
}

TEST(ImpactMatrixDpos, JobsDoNotChangeResult) {
    SynthConfig sc;
    sc.holders = 60;
    sc.days = 20;
    sc.seed = 11;
    auto log = generate_chain(sc);
    auto snaps = replay_snapshots(log, {});
    auto prods = extract_production(log);
    auto one = build_impact_matrix_dpos(snaps, prods, {}, 1);
    EXPECT_EQ(one, build_impact_matrix_dpos(snaps, prods, {}, 4));
    EXPECT_EQ(one, build_impact_matrix_dpos(snaps, prods, {}, 64));
}

ChainEvent reward(DayIndex day, std::uint64_t seq, const char* who, const char* pool, const char* amount) {
    return ChainEvent{day, seq, EventKind::ParticipantReward, AccountId(who), AccountId(pool),
                      Decimal::parse(amount)};
}

TEST(ImpactMatrixPow, SingleReward) {
    std::vector<ChainEvent> r{reward(0, 0, "a", "p", "5.0")};
    auto m = build_impact_matrix_pow(r);
    ASSERT_EQ(m.rows(), 1u);
    EXPECT_EQ(m.at(0, 0).to_string(), "5.000000");
}

TEST(ImpactMatrixPow, SumsAcrossPools) {
    std::vector<ChainEvent> r{reward(0, 0, "a", "p", "2"), reward(0, 1, "a", "q", "3")};
    EXPECT_EQ(build_impact_matrix_pow(r).at(0, 0), Decimal::from_units(5));
}

TEST(ImpactMatrixPow, DenseColumns) {
    std::vector<ChainEvent> r{reward(0, 0, "a", "p", "1"), reward(2, 0, "b", "p", "4")};
    auto m = build_impact_matrix_pow(r, 2);
    ASSERT_EQ(m.days(), 3u);
    EXPECT_TRUE(m.column_total(1).is_zero());
    EXPECT_EQ(m.individuals()[0], AccountId("b"));
}

TEST(ImpactMatrixPow, WrongKind) {
    std::vector<ChainEvent> r{ChainEvent{0, 0, EventKind::FreezeStake, AccountId("a"), {},
                                         Decimal::from_units(1)}};
    try {
        build_impact_matrix_pow(r);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongEventKind);
    }
}

TEST(ImpactMatrixPow, ColumnSumsEqualDailyRewards) {
    SynthConfig sc;
    sc.mode = SynthMode::Pow;
    sc.holders = 40;
    sc.candidates = 8;
    sc.days = 6;
    auto log = generate_chain(sc);
    std::vector<ChainEvent> rewards;
    std::vector<Decimal> daily(sc.days);
    for (const auto& e : log.events)
        if (e.kind == EventKind::ParticipantReward) {
            rewards.push_back(e);
            daily[e.day] += *e.amount;
        }
    auto m = build_impact_matrix_pow(rewards, log.horizon);
    ASSERT_EQ(m.days(), daily.size());
    for (std::size_t d = 0; d < daily.size(); ++d)
        EXPECT_EQ(m.column_total(d), daily[d]);
}

TEST(ExtractProduction, PerDayIncludingQuietDays) {
    EventLog log;
    log.events = {ChainEvent{0, 0, EventKind::BlockProduced, AccountId("p"), {}, Decimal::from_units(3)},
                  ChainEvent{2, 0, EventKind::BlockProduced, AccountId("x"), AccountId("q"),
                             Decimal::from_units(4)}};
    log.horizon = 2;
    auto prods = extract_production(log);
    ASSERT_EQ(prods.size(), 3u);
    EXPECT_EQ(prods[0].produced, units({{"p", 3}}));
    EXPECT_TRUE(prods[1].produced.empty());
    EXPECT_EQ(prods[2].produced, units({{"q", 4}}));
}

} // namespace
} // namespace decent
