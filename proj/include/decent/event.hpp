// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/decimal.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace decent {

/// Account name: 1..64 characters from [a-z0-9.-].
class AccountId {
public:
    static constexpr std::size_t kMaxLength = 64;

    AccountId() = default;
    /// Throws Error{InvalidAccountId}.
    explicit AccountId(std::string value);

    static bool is_valid(std::string_view value) noexcept;

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    auto operator<=>(const AccountId&) const = default;
    bool operator==(const AccountId&) const = default;

private:
    std::string value_;
};

std::ostream& operator<<(std::ostream& out, const AccountId& id);

/// Days since the log epoch (day 0).
using DayIndex = std::uint32_t;

enum class EventKind : std::uint8_t {
    FreezeStake,
    UnfreezeStake,
    RegisterCandidate,
    CastVote,
    RetractVote,
    SetProxy,
    ClearProxy,
    BlockProduced,
    ParticipantReward,
};

std::string_view to_string(EventKind kind) noexcept;
std::optional<EventKind> parse_event_kind(std::string_view name) noexcept;

bool kind_requires_amount(EventKind kind) noexcept;
bool kind_requires_target(EventKind kind) noexcept;
bool kind_accepts_target(EventKind kind) noexcept;

struct ChainEvent {
    DayIndex day = 0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::FreezeStake;
    AccountId actor;
    std::optional<AccountId> target;
    std::optional<Decimal> amount;

    /// BlockProduced names its producer in `target` when present, else `actor`.
    const AccountId& producer() const noexcept { return target ? *target : actor; }

    bool operator==(const ChainEvent&) const = default;
};

struct EventLog {
    std::vector<ChainEvent> events;
    DayIndex horizon = 0;

    bool operator==(const EventLog&) const = default;
};

} // namespace decent

template <>
struct std::hash<decent::AccountId> {
    std::size_t operator()(const decent::AccountId& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};
