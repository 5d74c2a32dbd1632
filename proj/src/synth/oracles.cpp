// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// Brute-force references for tests. Nothing here may call into the
// allocation or metrics modules.

#include "decent/error.hpp"
#include "decent/synth.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace decent::oracle {

namespace {

using i128 = __int128;

std::size_t exhaustive(std::span<const Decimal> values, i128 scaled_bar, i128 scale) {
    if (values.size() > kMaxSubsetValues)
        throw Error(ErrorCode::TooLarge, std::to_string(values.size()) + " values");
    const std::size_t n = values.size();
    std::size_t best = n + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best)
            continue;
        i128 sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                sum += values[i].micros();
        if (sum * scale > scaled_bar)
            best = size;
    }
    return best;
}

} // namespace

std::size_t min_subset(std::span<const Decimal> values, Decimal threshold) {
    return exhaustive(values, threshold.micros(), 1);
}

std::size_t min_subset_share(std::span<const Decimal> values, Decimal share) {
    i128 total = 0;
    for (auto v : values)
        total += v.micros();
    return exhaustive(values, total * share.micros(), Decimal::kScale);
}

std::map<AccountId, Decimal> allocation(const DailySnapshot& snapshot,
                                        const DailyProduction& production,
                                        std::uint32_t max_proxy_depth) {
    // Terminal voter for one holder, or empty string when the chain cycles or
    // runs deeper than max_proxy_depth edges.
    auto walk = [&](const std::string& start) -> std::string {
        std::vector<std::string> chain{start};
        for (;;) {
            bool found = false;
            std::string next;
            for (const auto& [from, to] : snapshot.proxy) {
                if (from.str() == chain.back()) {
                    found = true;
                    next = to.str();
                    break;
                }
            }
            if (!found)
                return chain.back();
            if (std::find(chain.begin(), chain.end(), next) != chain.end())
                return {};
            chain.push_back(next);
            if (chain.size() - 1 > max_proxy_depth)
                return {};
        }
    };

    std::map<std::string, i128> totals;
    for (const auto& [producer, blocks] : production.produced) {
        if (blocks.micros() == 0)
            continue;
        bool registered = false;
        for (const auto& c : snapshot.candidates)
            registered = registered || c.str() == producer.str();
        if (!registered)
            continue;

        std::vector<std::pair<std::string, i128>> backers;
        for (const auto& [holder, power] : snapshot.power) {
            if (power.micros() <= 0)
                continue;
            auto voter = walk(holder.str());
            if (voter.empty())
                continue;
            for (const auto& [who, picks] : snapshot.votes) {
                if (who.str() != voter)
                    continue;
                for (const auto& pick : picks)
                    if (pick.str() == producer.str())
                        backers.emplace_back(holder.str(), power.micros());
            }
        }
        if (backers.empty())
            continue;

        i128 weight = 0;
        for (const auto& b : backers)
            weight += b.second;
        i128 given = 0;
        std::size_t top = 0;
        for (std::size_t i = 0; i < backers.size(); ++i) {
            i128 share = static_cast<i128>(blocks.micros()) * backers[i].second / weight;
            totals[backers[i].first] += share;
            given += share;
            if (backers[i].second > backers[top].second)
                top = i;
        }
        totals[backers[top].first] += blocks.micros() - given;
    }

    std::map<AccountId, Decimal> out;
    for (const auto& [id, micros] : totals)
        if (micros != 0)
            out.emplace(AccountId(id), Decimal::from_micros(static_cast<std::int64_t>(micros)));
    return out;
}

} // namespace decent::oracle
