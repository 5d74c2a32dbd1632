// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/allocation.hpp"
#include "decent/event_log.hpp"
#include "decent/metrics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace decent {

// CSV renderers. Decimals are plain text with six fractional digits and rows
// end in '\n'.

/// "account,d0,d1,..."
std::string impact_to_csv(const ImpactMatrix& impacts);
/// "day,f"
std::string mt_to_csv(const MtSeries& series);
/// "producer,b0,..,bK"
std::string production_to_csv(const ProductionMatrix& blocks);
std::string rates_to_csv(const NormalizedRateMatrix& rates);

struct CaptureCostRow {
    DayIndex day = 0;
    std::optional<Decimal> governance; // empty when approvals_needed > committee_size
    Decimal full;
};

/// "day,governance,full"
std::string capture_cost_to_csv(const std::vector<CaptureCostRow>& rows);

/// One JSON object per violation: {"event":i,"day":d,"seq":s,"kind":"..."}.
std::string validation_report_to_jsonl(const EventLog& log, const ValidationReport& report);

} // namespace decent
