// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// decent-meter: ingest | analyze | synth | version

#include "decent/cli.hpp"
#include "decent/error.hpp"
#include "decent/kernels.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using decent::cli::Override;

struct CommonFlags {
    std::string config;
    std::vector<std::string> sets;
    std::optional<std::string> mode;
    std::optional<std::string> threshold;
    std::optional<unsigned> top_l;
    std::optional<unsigned> bucket_days;
    std::optional<unsigned> committee_size;
    std::optional<unsigned> jobs;
    std::optional<std::string> out;

    void attach(CLI::App& app) {
        app.add_option("--config", config, "JSON run configuration");
        app.add_option("--set", sets, "Override a config field: dotted.path=value");
        app.add_option("--mode", mode, "dpos or pow")->check(CLI::IsMember({"dpos", "pow"}));
        app.add_option("--threshold", threshold, "MT threshold t in (0,1)");
        app.add_option("--top-l", top_l, "Producers kept in the heatmap");
        app.add_option("--bucket-days", bucket_days, "Days per heatmap bucket");
        app.add_option("--committee-size", committee_size, "Committee seats");
        app.add_option("--jobs", jobs, "Worker threads for per-day work");
        app.add_option("--out", out, "Output directory");
    }

    std::vector<Override> overrides() const {
        std::vector<Override> list;
        if (mode)
            list.push_back({"mode", "\"" + *mode + "\""});
        if (threshold)
            list.push_back({"metrics.threshold", "\"" + *threshold + "\""});
        if (top_l)
            list.push_back({"metrics.top_l", std::to_string(*top_l)});
        if (bucket_days)
            list.push_back({"metrics.bucket_days", std::to_string(*bucket_days)});
        if (committee_size) {
            list.push_back({"engine.committee_size", std::to_string(*committee_size)});
            list.push_back({"synth.committee_size", std::to_string(*committee_size)});
        }
        if (jobs)
            list.push_back({"jobs", std::to_string(*jobs)});
        if (out)
            list.push_back({"out", nlohmann_quote(*out)});
        for (const auto& s : sets) {
            auto eq = s.find('=');
            if (eq == std::string::npos)
                throw decent::Error(decent::ErrorCode::InvalidConfig,
                                    "--set expects path=value, got '" + s + "'");
            list.push_back({s.substr(0, eq), s.substr(eq + 1)});
        }
        return list;
    }

    static std::string nlohmann_quote(const std::string& text) {
        std::string quoted = "\"";
        for (char ch : text) {
            if (ch == '"' || ch == '\\')
                quoted += '\\';
            quoted += ch;
        }
        return quoted + "\"";
    }

    decent::cli::RunConfig load(std::vector<Override> extra = {}) const {
        auto list = overrides();
        list.insert(list.end(), extra.begin(), extra.end());
        auto cfg = config.empty() ? decent::cli::load_run_config("", list)
                                  : decent::cli::load_run_config_file(config, list);
        decent::cli::apply_environment(cfg);
        return cfg;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decentralization metrics for DPoS and PoW event logs", "decent-meter"};
    app.require_subcommand(1);

    auto* ingest = app.add_subcommand("ingest", "Parse and validate an event log");
    std::string ingest_input, ingest_output;
    ingest->add_option("input", ingest_input, "Event log (JSONL)")->required();
    ingest->add_option("output", ingest_output, "Normalized log path")->required();

    auto* analyze = app.add_subcommand("analyze", "Replay a log and write metric CSVs");
    CommonFlags analyze_flags;
    analyze_flags.attach(*analyze);
    std::optional<std::string> analyze_input;
    bool with_snapshots = false;
    analyze->add_option("--input", analyze_input, "Event log (overrides config input)");
    analyze->add_flag("--snapshots", with_snapshots, "Also write snapshots.jsonl");

    auto* synth = app.add_subcommand("synth", "Generate a synthetic event log");
    CommonFlags synth_flags;
    synth_flags.attach(*synth);
    std::string synth_output;
    synth->add_option("output", synth_output, "Output JSONL path")->required();

    auto* version = app.add_subcommand("version", "Print version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : decent::cli::kExitError;
    }

    try {
        if (*ingest)
            return decent::cli::cmd_ingest(ingest_input, ingest_output, std::cout, std::cerr);

        if (*analyze) {
            std::vector<Override> extra;
            if (analyze_input)
                extra.push_back({"input", CommonFlags::nlohmann_quote(*analyze_input)});
            if (with_snapshots)
                extra.push_back({"snapshots", "true"});
            return decent::cli::cmd_analyze(analyze_flags.load(extra), std::cout, std::cerr);
        }

        if (*synth) {
            auto cfg = synth_flags.load();
            if (synth_flags.mode)
                cfg.synth.mode =
                    *synth_flags.mode == "pow" ? decent::SynthMode::Pow : decent::SynthMode::Dpos;
            return decent::cli::cmd_synth(cfg, synth_output, std::cout, std::cerr);
        }

        if (*version) {
            std::cout << "decent-meter " << decent::cli::kVersion << " (kernels: "
                      << decent::kernels::to_string(decent::kernels::active_isa()) << ")\n";
            return decent::cli::kExitOk;
        }
    } catch (const decent::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return decent::cli::kExitError;
    }
    return decent::cli::kExitError;
}
