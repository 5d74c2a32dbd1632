// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/error.hpp"

#include <utility>

namespace decent {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::OutOfOrder: return "OutOfOrder";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::InsufficientFrozenStake: return "InsufficientFrozenStake";
    case ErrorCode::VoteCapExceeded: return "VoteCapExceeded";
    case ErrorCode::UnregisteredCandidate: return "UnregisteredCandidate";
    case ErrorCode::SelfProxy: return "SelfProxy";
    case ErrorCode::DayMismatch: return "DayMismatch";
    case ErrorCode::MisalignedDays: return "MisalignedDays";
    case ErrorCode::WrongEventKind: return "WrongEventKind";
    case ErrorCode::SeatsOutOfRange: return "SeatsOutOfRange";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyCommittee: return "EmptyCommittee";
    case ErrorCode::InvalidDecimal: return "InvalidDecimal";
    case ErrorCode::InvalidAccountId: return "InvalidAccountId";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           const std::optional<std::size_t>& line, const std::string& field) {
    std::string out(to_string(code));
    if (line)
        out += " at line " + std::to_string(*line);
    if (!field.empty())
        out += " (field '" + field + "')";
    if (!message.empty())
        out += ": " + message;
    return out;
}

} // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line,
             std::string field)
    : std::runtime_error(format_message(code, message, line, field)), code_(code), line_(line),
      field_(std::move(field)) {}

} // namespace decent
