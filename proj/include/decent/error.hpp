// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace decent {

enum class ErrorCode {
    MalformedLine,
    OutOfOrder,
    SchemaViolation,
    InsufficientFrozenStake,
    VoteCapExceeded,
    UnregisteredCandidate,
    SelfProxy,
    DayMismatch,
    MisalignedDays,
    WrongEventKind,
    SeatsOutOfRange,
    InvalidConfig,
    TooLarge,
    EmptyCommittee,
    InvalidDecimal,
    InvalidAccountId,
    Overflow,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures surface as this exception. `line` is 1-based when the
// failure is tied to an input line; `field` names the offending record field.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line = {},
          std::string field = {});

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
    std::string field_;
};

} // namespace decent
