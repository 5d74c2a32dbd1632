// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/event.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace decent {

/// Reads the line-delimited JSON event format. Each non-empty line not
/// starting with '#' must be one object with exactly the fields
/// {day, seq, kind, actor, target?, amount?}; amounts are decimal text.
/// Records must be strictly ascending in (day, seq).
///
/// Throws Error{MalformedLine | OutOfOrder | SchemaViolation} carrying the
/// 1-based physical line number.
EventLog parse_event_log(std::istream& input);
EventLog parse_event_log_text(std::string_view text);

/// One canonical JSON line (no trailing newline).
std::string serialize_event(const ChainEvent& event);
/// Canonical JSONL; parse_event_log(serialize_event_log(log)) == log when
/// log.horizon equals its maximum day.
std::string serialize_event_log(const EventLog& log);

enum class ViolationKind {
    InsufficientFrozenStake,
    UnregisteredCandidate,
    VoteCapExceeded,
    SelfProxy,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
    std::size_t event_index = 0;
    ViolationKind kind = ViolationKind::InsufficientFrozenStake;

    bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

/// Dry-run of replay rules. A violating event is reported and skipped, so
/// later events are checked against the state replay would have had if the
/// offending record were dropped.
ValidationReport validate_event_log(const EventLog& log);

} // namespace decent
