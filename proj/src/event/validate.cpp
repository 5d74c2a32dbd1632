// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/election.hpp"
#include "decent/error.hpp"
#include "decent/event_log.hpp"

namespace decent {

ValidationReport validate_event_log(const EventLog& log) {
    ValidationReport report;
    ElectionEngine engine;
    for (std::size_t i = 0; i < log.events.size(); ++i) {
        try {
            engine.apply(log.events[i]);
        } catch (const Error& e) {
            switch (e.code()) {
            case ErrorCode::InsufficientFrozenStake:
                report.push_back({i, ViolationKind::InsufficientFrozenStake});
                break;
            case ErrorCode::UnregisteredCandidate:
                report.push_back({i, ViolationKind::UnregisteredCandidate});
                break;
            case ErrorCode::VoteCapExceeded:
                report.push_back({i, ViolationKind::VoteCapExceeded});
                break;
            case ErrorCode::SelfProxy:
                report.push_back({i, ViolationKind::SelfProxy});
                break;
            default:
                throw;
            }
        }
    }
    return report;
}

} // namespace decent
