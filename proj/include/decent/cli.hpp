// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "decent/election.hpp"
#include "decent/metrics.hpp"
#include "decent/synth.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace decent::cli {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolations = 2;

enum class Mode { Dpos, Pow };

struct RunConfig {
    Mode mode = Mode::Dpos;
    std::filesystem::path input;
    std::filesystem::path out = "out";
    bool snapshots = false;
    unsigned jobs = 1;
    EngineConfig engine;
    MetricConfig metrics;
    SynthConfig synth;
};

/// Dotted-path override, e.g. {"engine.committee_size", "17"}. The value is
/// read as JSON when it parses, otherwise as a string.
struct Override {
    std::string path;
    std::string value;
};

/// Builds a RunConfig from optional config-file text plus overrides applied
/// in order. Throws Error{InvalidConfig} on unknown keys or bad values.
RunConfig load_run_config(std::string_view config_text, const std::vector<Override>& overrides);
RunConfig load_run_config_file(const std::filesystem::path& path,
                               const std::vector<Override>& overrides);

/// Applies DECENT_METER_SEED to cfg.synth.seed when set.
void apply_environment(RunConfig& cfg);

/// Writes via a sibling temp file and rename. Throws Error{Io}.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Parses and validates `input`; writes the canonical log to `output` and the
/// violation list to `output` + ".report.jsonl". Exit 0 clean, 1 on parse or
/// I/O failure (nothing written), 2 when violations were found.
int cmd_ingest(const std::filesystem::path& input, const std::filesystem::path& output,
               std::ostream& out, std::ostream& err);

/// Runs the full pipeline for cfg.mode and writes impact.csv, mt.csv,
/// production.csv, heatmap.csv, plus capture_cost.csv and optionally
/// snapshots.jsonl in DPoS mode, under cfg.out. Exit 0 or 1.
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Generates cfg.synth and writes the fixture-format log to `output`.
int cmd_synth(const RunConfig& cfg, const std::filesystem::path& output, std::ostream& out,
              std::ostream& err);

} // namespace decent::cli
