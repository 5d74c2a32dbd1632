// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/event_log.hpp"

#include "decent/error.hpp"

#include <json.hpp>

#include <istream>
#include <limits>
#include <sstream>
#include <utility>

namespace decent {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& field, std::size_t line, const std::string& why) {
    throw Error(ErrorCode::SchemaViolation, why, line, field);
}

std::uint64_t read_unsigned(const json& obj, const char* field, std::size_t line,
                            std::uint64_t max) {
    auto it = obj.find(field);
    if (it == obj.end())
        schema(field, line, "missing");
    if (!it->is_number_unsigned())
        schema(field, line, "expected non-negative integer");
    auto value = it->get<std::uint64_t>();
    if (value > max)
        schema(field, line, "out of range");
    return value;
}

AccountId read_account(const json& value, const char* field, std::size_t line) {
    if (!value.is_string())
        schema(field, line, "expected string");
    auto text = value.get<std::string>();
    if (!AccountId::is_valid(text))
        schema(field, line, "invalid account id '" + text + "'");
    return AccountId(std::move(text));
}

ChainEvent decode_record(const json& obj, std::size_t line) {
    for (const auto& item : obj.items()) {
        const auto& key = item.key();
        if (key != "day" && key != "seq" && key != "kind" && key != "actor" && key != "target" &&
            key != "amount")
            schema(key, line, "unknown field");
    }

    ChainEvent ev;
    ev.day = static_cast<DayIndex>(
        read_unsigned(obj, "day", line, std::numeric_limits<DayIndex>::max()));
    ev.seq = read_unsigned(obj, "seq", line, std::numeric_limits<std::uint64_t>::max());

    auto kind_it = obj.find("kind");
    if (kind_it == obj.end())
        schema("kind", line, "missing");
    if (!kind_it->is_string())
        schema("kind", line, "expected string");
    auto kind = parse_event_kind(kind_it->get<std::string>());
    if (!kind)
        schema("kind", line, "unknown kind '" + kind_it->get<std::string>() + "'");
    ev.kind = *kind;

    auto actor_it = obj.find("actor");
    if (actor_it == obj.end())
        schema("actor", line, "missing");
    ev.actor = read_account(*actor_it, "actor", line);

    if (auto it = obj.find("target"); it != obj.end()) {
        if (!kind_accepts_target(ev.kind))
            schema("target", line, "not allowed for " + std::string(to_string(ev.kind)));
        ev.target = read_account(*it, "target", line);
    } else if (kind_requires_target(ev.kind)) {
        schema("target", line, "required for " + std::string(to_string(ev.kind)));
    }

    if (auto it = obj.find("amount"); it != obj.end()) {
        if (!kind_requires_amount(ev.kind))
            schema("amount", line, "not allowed for " + std::string(to_string(ev.kind)));
        if (!it->is_string())
            schema("amount", line, "expected decimal text");
        try {
            ev.amount = Decimal::parse(it->get<std::string>());
        } catch (const Error& e) {
            schema("amount", line, e.what());
        }
    } else if (kind_requires_amount(ev.kind)) {
        schema("amount", line, "required for " + std::string(to_string(ev.kind)));
    }

    if (ev.kind == EventKind::SetProxy && ev.target == ev.actor)
        schema("target", line, "proxy target equals actor");
    return ev;
}

} // namespace

EventLog parse_event_log(std::istream& input) {
    EventLog log;
    std::string text;
    std::size_t line = 0;
    while (std::getline(input, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        if (text.empty() || text.front() == '#')
            continue;

        json obj;
        try {
            obj = json::parse(text);
        } catch (const json::parse_error& e) {
            throw Error(ErrorCode::MalformedLine, e.what(), line);
        }
        if (!obj.is_object())
            throw Error(ErrorCode::MalformedLine, "expected a JSON object", line);

        auto ev = decode_record(obj, line);
        if (!log.events.empty()) {
            const auto& prev = log.events.back();
            if (std::pair(ev.day, ev.seq) <= std::pair(prev.day, prev.seq))
                throw Error(ErrorCode::OutOfOrder,
                            "(day " + std::to_string(ev.day) + ", seq " + std::to_string(ev.seq) +
                                ") does not follow (day " + std::to_string(prev.day) + ", seq " +
                                std::to_string(prev.seq) + ")",
                            line);
        }
        log.horizon = ev.day;
        log.events.push_back(std::move(ev));
    }
    return log;
}

EventLog parse_event_log_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_event_log(in);
}

std::string serialize_event(const ChainEvent& event) {
    std::string out;
    out.reserve(96);
    out += "{\"day\":" + std::to_string(event.day);
    out += ",\"seq\":" + std::to_string(event.seq);
    out += ",\"kind\":\"";
    out += to_string(event.kind);
    out += "\",\"actor\":\"" + event.actor.str() + "\"";
    if (event.target)
        out += ",\"target\":\"" + event.target->str() + "\"";
    if (event.amount)
        out += ",\"amount\":\"" + event.amount->to_string() + "\"";
    out += '}';
    return out;
}

std::string serialize_event_log(const EventLog& log) {
    std::string out;
    for (const auto& ev : log.events) {
        out += serialize_event(ev);
        out += '\n';
    }
    return out;
}

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
    case ViolationKind::InsufficientFrozenStake: return "InsufficientFrozenStake";
    case ViolationKind::UnregisteredCandidate: return "UnregisteredCandidate";
    case ViolationKind::VoteCapExceeded: return "VoteCapExceeded";
    case ViolationKind::SelfProxy: return "SelfProxy";
    }
    return "Unknown";
}

} // namespace decent
