// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/event.hpp"

#include "decent/error.hpp"

#include <array>
#include <ostream>
#include <utility>

namespace decent {

AccountId::AccountId(std::string value) : value_(std::move(value)) {
    if (!is_valid(value_))
        throw Error(ErrorCode::InvalidAccountId, "'" + value_ + "'");
}

bool AccountId::is_valid(std::string_view value) noexcept {
    if (value.empty() || value.size() > kMaxLength)
        return false;
    for (char ch : value) {
        bool ok = (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '.' || ch == '-';
        if (!ok)
            return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& out, const AccountId& id) { return out << id.str(); }

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 9> kKindNames{{
    {EventKind::FreezeStake, "FreezeStake"},
    {EventKind::UnfreezeStake, "UnfreezeStake"},
    {EventKind::RegisterCandidate, "RegisterCandidate"},
    {EventKind::CastVote, "CastVote"},
    {EventKind::RetractVote, "RetractVote"},
    {EventKind::SetProxy, "SetProxy"},
    {EventKind::ClearProxy, "ClearProxy"},
    {EventKind::BlockProduced, "BlockProduced"},
    {EventKind::ParticipantReward, "ParticipantReward"},
}};

} // namespace

std::string_view to_string(EventKind kind) noexcept {
    for (const auto& [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "Unknown";
}

std::optional<EventKind> parse_event_kind(std::string_view name) noexcept {
    for (const auto& [k, n] : kKindNames)
        if (n == name)
            return k;
    return std::nullopt;
}

bool kind_requires_amount(EventKind kind) noexcept {
    switch (kind) {
    case EventKind::FreezeStake:
    case EventKind::UnfreezeStake:
    case EventKind::BlockProduced:
    case EventKind::ParticipantReward:
        return true;
    default:
        return false;
    }
}

bool kind_requires_target(EventKind kind) noexcept {
    switch (kind) {
    case EventKind::CastVote:
    case EventKind::RetractVote:
    case EventKind::SetProxy:
    case EventKind::ParticipantReward:
        return true;
    default:
        return false;
    }
}

bool kind_accepts_target(EventKind kind) noexcept {
    return kind_requires_target(kind) || kind == EventKind::BlockProduced;
}

} // namespace decent
