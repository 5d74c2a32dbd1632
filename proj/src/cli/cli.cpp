// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/cli.hpp"

#include "decent/allocation.hpp"
#include "decent/error.hpp"
#include "decent/event_log.hpp"
#include "decent/report.hpp"

#include <json.hpp>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace decent::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& why) { throw Error(ErrorCode::InvalidConfig, why); }

void apply_override(json& root, const Override& o) {
    if (o.path.empty())
        bad_config("empty override path");
    json value;
    try {
        value = json::parse(o.value);
    } catch (const json::parse_error&) {
        value = o.value;
    }

    json* node = &root;
    std::string_view rest = o.path;
    for (;;) {
        auto dot = rest.find('.');
        std::string key(rest.substr(0, dot));
        if (key.empty())
            bad_config("bad override path '" + o.path + "'");
        if (!node->is_object())
            bad_config("override path '" + o.path + "' crosses a non-object");
        if (dot == std::string_view::npos) {
            (*node)[key] = value;
            return;
        }
        node = &(*node)[key];
        if (node->is_null())
            *node = json::object();
        rest = rest.substr(dot + 1);
    }
}

Decimal decimal_field(const json& value, const std::string& key) {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    try {
        return Decimal::parse(text);
    } catch (const Error&) {
        bad_config(key + ": expected decimal, got " + text);
    }
}

std::uint32_t positive_field(const json& value, const std::string& key) {
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() > 0xffffffffULL)
        bad_config(key + ": expected non-negative integer");
    return value.get<std::uint32_t>();
}

EngineConfig decode_engine(const json& j) {
    EngineConfig cfg;
    if (!j.is_object())
        bad_config("engine must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "committee_size")
            cfg.committee_size = positive_field(value, "engine.committee_size");
        else if (key == "max_proxy_depth")
            cfg.max_proxy_depth = positive_field(value, "engine.max_proxy_depth");
        else
            bad_config("unknown key engine." + key);
    }
    cfg.validate();
    return cfg;
}

MetricConfig decode_metrics(const json& j) {
    MetricConfig cfg;
    if (!j.is_object())
        bad_config("metrics must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "threshold")
            cfg.threshold = decimal_field(value, "metrics.threshold");
        else if (key == "top_l")
            cfg.top_l = positive_field(value, "metrics.top_l");
        else if (key == "bucket_days")
            cfg.bucket_days = positive_field(value, "metrics.bucket_days");
        else if (key == "approvals_needed")
            cfg.approvals_needed = positive_field(value, "metrics.approvals_needed");
        else
            bad_config("unknown key metrics." + key);
    }
    cfg.validate();
    return cfg;
}

RunConfig decode_run_config(const json& root) {
    if (!root.is_object())
        bad_config("config must be a JSON object");
    RunConfig cfg;
    try {
        for (const auto& [key, value] : root.items()) {
            if (key == "mode") {
                auto m = value.get<std::string>();
                if (m == "dpos")
                    cfg.mode = Mode::Dpos;
                else if (m == "pow")
                    cfg.mode = Mode::Pow;
                else
                    bad_config("mode must be dpos or pow, got '" + m + "'");
            } else if (key == "input") {
                cfg.input = value.get<std::string>();
            } else if (key == "out") {
                cfg.out = value.get<std::string>();
            } else if (key == "snapshots") {
                cfg.snapshots = value.get<bool>();
            } else if (key == "jobs") {
                cfg.jobs = positive_field(value, "jobs");
                if (cfg.jobs < 1)
                    bad_config("jobs must be >= 1");
            } else if (key == "engine") {
                cfg.engine = decode_engine(value);
            } else if (key == "metrics") {
                cfg.metrics = decode_metrics(value);
            } else if (key == "synth") {
                cfg.synth = SynthConfig::from_json(value.dump());
            } else {
                bad_config("unknown key " + key);
            }
        }
    } catch (const json::exception& e) {
        bad_config(e.what());
    }
    return cfg;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

RunConfig load_run_config(std::string_view config_text, const std::vector<Override>& overrides) {
    json root = json::object();
    if (!config_text.empty()) {
        try {
            root = json::parse(config_text);
        } catch (const json::parse_error& e) {
            bad_config(e.what());
        }
    }
    for (const auto& o : overrides)
        apply_override(root, o);
    return decode_run_config(root);
}

RunConfig load_run_config_file(const fs::path& path, const std::vector<Override>& overrides) {
    if (!fs::exists(path))
        throw Error(ErrorCode::Io, "config file '" + path.string() + "' does not exist");
    return load_run_config(read_file(path), overrides);
}

void apply_environment(RunConfig& cfg) {
    const char* seed = std::getenv("DECENT_METER_SEED");
    if (!seed || !*seed)
        return;
    char* end = nullptr;
    errno = 0;
    auto value = std::strtoull(seed, &end, 10);
    if (errno != 0 || *end != '\0' || seed[0] == '-')
        bad_config(std::string("DECENT_METER_SEED is not an unsigned integer: ") + seed);
    cfg.synth.seed = value;
}

void write_file_atomic(const fs::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw Error(ErrorCode::Io, "cannot create '" + path.parent_path().string() +
                                           "': " + ec.message());
    }
    auto tmp = path;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        file.write(content.data(), static_cast<std::streamsize>(content.size()));
        file.flush();
        if (!file) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw Error(ErrorCode::Io, "cannot write '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw Error(ErrorCode::Io, "cannot rename into '" + path.string() + "': " + ec.message());
    }
}

int cmd_ingest(const fs::path& input, const fs::path& output, std::ostream& out,
               std::ostream& err) {
    try {
        if (!fs::exists(input)) {
            err << "error: input '" << input.string() << "' does not exist\n";
            return kExitError;
        }
        std::ifstream in(input, std::ios::binary);
        if (!in) {
            err << "error: cannot open input '" << input.string() << "'\n";
            return kExitError;
        }
        auto log = parse_event_log(in);
        auto report = validate_event_log(log);

        auto report_path = output;
        report_path += ".report.jsonl";
        auto normalized = serialize_event_log(log);
        auto report_text = validation_report_to_jsonl(log, report);
        write_file_atomic(output, normalized);
        write_file_atomic(report_path, report_text);

        out << "ingested " << log.events.size() << " events (horizon " << log.horizon << "), "
            << report.size() << " violations\n";
        for (const auto& v : report)
            err << "violation: event " << v.event_index << ": " << to_string(v.kind) << "\n";
        return report.empty() ? kExitOk : kExitViolations;
    } catch (const Error& e) {
        err << "error: " << input.string() << ": " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.input.empty()) {
            err << "error: no input log configured\n";
            return kExitError;
        }
        if (!fs::exists(cfg.input)) {
            err << "error: input '" << cfg.input.string() << "' does not exist\n";
            return kExitError;
        }
        cfg.engine.validate();
        cfg.metrics.validate();

        std::ifstream in(cfg.input, std::ios::binary);
        auto log = parse_event_log(in);
        auto productions = extract_production(log);

        std::vector<std::pair<std::string, std::string>> files;
        ImpactMatrix impacts;
        if (cfg.mode == Mode::Dpos) {
            auto snapshots = replay_snapshots(log, cfg.engine);
            impacts = build_impact_matrix_dpos(snapshots, productions, cfg.engine, cfg.jobs);

            std::vector<CaptureCostRow> rows;
            for (const auto& snap : snapshots) {
                CaptureCostRow row;
                row.day = snap.day;
                if (cfg.metrics.approvals_needed <= cfg.engine.committee_size)
                    row.governance = capture_cost(snap, cfg.metrics.approvals_needed, cfg.engine);
                row.full = capture_cost(snap, cfg.engine.committee_size, cfg.engine);
                rows.push_back(row);
            }
            files.emplace_back("capture_cost.csv", capture_cost_to_csv(rows));
            if (cfg.snapshots) {
                std::string text;
                for (const auto& snap : snapshots)
                    text += snapshot_to_json(snap) + "\n";
                files.emplace_back("snapshots.jsonl", std::move(text));
            }
        } else {
            std::vector<ChainEvent> rewards;
            for (const auto& ev : log.events)
                if (ev.kind == EventKind::ParticipantReward)
                    rewards.push_back(ev);
            impacts = build_impact_matrix_pow(rewards, log.horizon);
        }

        auto series = mt_coefficient(impacts, cfg.metrics, cfg.jobs);
        auto blocks = production_matrix(productions, cfg.metrics);
        auto rates = normalize_rates(blocks);
        files.emplace_back("impact.csv", impact_to_csv(impacts));
        files.emplace_back("mt.csv", mt_to_csv(series));
        files.emplace_back("production.csv", production_to_csv(blocks));
        files.emplace_back("heatmap.csv", rates_to_csv(rates));

        for (const auto& [name, content] : files)
            write_file_atomic(cfg.out / name, content);

        std::uint64_t active = 0, sum = 0;
        for (auto f : series.values)
            if (f > 0) {
                ++active;
                sum += f;
            }
        out << "analyzed " << log.events.size() << " events over " << series.values.size()
            << " days (" << (cfg.mode == Mode::Dpos ? "dpos" : "pow") << "): " << impacts.rows()
            << " individuals, " << blocks.rows() << " producers, mean MT "
            << (active ? static_cast<double>(sum) / static_cast<double>(active) : 0.0) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_synth(const RunConfig& cfg, const fs::path& output, std::ostream& out, std::ostream& err) {
    try {
        auto log = generate_chain(cfg.synth);
        write_file_atomic(output, render_fixture(cfg.synth, log));
        out << "wrote " << log.events.size() << " events, " << cfg.synth.holders << " holders, "
            << cfg.synth.days << " days to " << output.string() << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace decent::cli
