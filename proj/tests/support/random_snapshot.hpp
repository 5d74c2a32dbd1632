// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/allocation.hpp"
#include "decent/election.hpp"
#include "decent/rng.hpp"

#include <string>

namespace decent::testing {

struct RandomSnapshotParams {
    std::size_t max_accounts = 100;
    std::size_t max_candidates = 30;
    double proxy_prob = 0.3;
    double zero_power_prob = 0.1;
};

/// Random but invariant-respecting snapshot: proxy holders cast no votes,
/// at most 30 votes each, votes only for registered candidates. Proxy edges
/// are arbitrary, so cycles and long chains occur.
DailySnapshot random_snapshot(Rng& rng, const RandomSnapshotParams& params,
                              const EngineConfig& cfg, DayIndex day = 0);

/// Production for a random subset of the registered candidates, with an
/// occasional unregistered producer.
DailyProduction random_production(Rng& rng, const DailySnapshot& snapshot);

std::string read_text(const std::string& path);

} // namespace decent::testing
