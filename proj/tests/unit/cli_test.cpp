// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/cli.hpp"
#include "decent/error.hpp"

#include "support/random_snapshot.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace decent::cli {
namespace {

namespace fs = std::filesystem;
using testing::read_text;

const fs::path kFixtures = fs::path(DECENT_FIXTURE_DIR) / "v1";
const fs::path kGolden = DECENT_GOLDEN_DIR;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() /
               ("decent-cli-" + std::to_string(::getpid()) + "-" + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    void write(const fs::path& path, const std::string& text) {
        std::ofstream(path, std::ios::binary) << text;
    }

    // Runs the built binary; returns its exit status.
    int run(const std::string& args, std::string* stdout_text = nullptr) {
        auto out = dir_ / "stdout.txt";
        auto cmd = std::string("\"") + DECENT_METER_BIN + "\" " + args + " > \"" + out.string() +
                   "\" 2> \"" + (dir_ / "stderr.txt").string() + "\"";
        int raw = std::system(cmd.c_str());
        if (stdout_text)
            *stdout_text = read_text(out.string());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    }
    std::string stderr_text() { return read_text((dir_ / "stderr.txt").string()); }

    fs::path dir_;
};

RunConfig analyze_config(const fs::path& input, const fs::path& out, std::string mode = "dpos") {
    return load_run_config("", {{"mode", mode}, {"input", input.string()}, {"out", out.string()}});
}

TEST_F(CliTest, IngestCleanFixture) {
    std::ostringstream out, err;
    auto normalized = dir_ / "norm.jsonl";
    EXPECT_EQ(cmd_ingest(kFixtures / "tiny_seed1.jsonl", normalized, out, err), kExitOk) << err.str();
    EXPECT_EQ(read_text(normalized.string() + ".report.jsonl"), "");
    // normalization drops the config comment only
    auto original = read_text((kFixtures / "tiny_seed1.jsonl").string());
    EXPECT_EQ(original.substr(original.find('\n') + 1), read_text(normalized.string()));
}

TEST_F(CliTest, IngestReportsVoteCap) {
    std::ostringstream out, err;
    auto normalized = dir_ / "norm.jsonl";
    EXPECT_EQ(cmd_ingest(kFixtures / "vote_cap.jsonl", normalized, out, err), kExitViolations);
    auto report = read_text(normalized.string() + ".report.jsonl");
    EXPECT_NE(report.find("VoteCapExceeded"), std::string::npos);
    EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), 1);
}

TEST_F(CliTest, IngestMissingInputNamesPath) {
    std::ostringstream out, err;
    auto missing = dir_ / "nope.jsonl";
    EXPECT_EQ(cmd_ingest(missing, dir_ / "x.jsonl", out, err), kExitError);
    EXPECT_NE(err.str().find(missing.string()), std::string::npos);
    EXPECT_FALSE(fs::exists(dir_ / "x.jsonl"));
}

TEST_F(CliTest, IngestParseErrorWritesNothing) {
    auto input = dir_ / "bad.jsonl";
    write(input, "{\"day\":0,\"seq\":0,\"kind\":\"FreezeStake\",\"actor\":\"a\",\"amount\":\"1\"}\nnot json\n");
    std::ostringstream out, err;
    EXPECT_EQ(cmd_ingest(input, dir_ / "x.jsonl", out, err), kExitError);
    EXPECT_NE(err.str().find("line 2"), std::string::npos);
    EXPECT_FALSE(fs::exists(dir_ / "x.jsonl"));
    EXPECT_FALSE(fs::exists(dir_ / "x.jsonl.report.jsonl"));
}

TEST_F(CliTest, AnalyzeSingleHolderMtIsOne) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_analyze(analyze_config(kFixtures / "one_holder.jsonl", dir_ / "o"), out, err), kExitOk)
        << err.str();
    std::istringstream mt(read_text((dir_ / "o" / "mt.csv").string()));
    std::string line;
    std::getline(mt, line);
    EXPECT_EQ(line, "day,f");
    int rows = 0;
    while (std::getline(mt, line)) {
        EXPECT_EQ(line, std::to_string(rows) + ",1");
        ++rows;
    }
    EXPECT_EQ(rows, 3);
}

TEST_F(CliTest, AnalyzePowTwoParticipants) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_analyze(analyze_config(kFixtures / "pow_two.jsonl", dir_ / "o", "pow"), out, err),
              kExitOk)
        << err.str();
    EXPECT_EQ(read_text((dir_ / "o" / "mt.csv").string()), "day,f\n0,1\n1,1\n2,1\n");
    EXPECT_FALSE(fs::exists(dir_ / "o" / "capture_cost.csv"));
}

TEST_F(CliTest, AnalyzeSeed42MatchesGoldens) {
    std::ostringstream out, err;
    auto cfg = analyze_config(kFixtures / "seed42.jsonl", dir_ / "o");
    ASSERT_EQ(cmd_analyze(cfg, out, err), kExitOk) << err.str();
    for (const char* name : {"impact.csv", "mt.csv", "production.csv", "heatmap.csv", "capture_cost.csv"})
        EXPECT_EQ(read_text((dir_ / "o" / name).string()), read_text((kGolden / "seed42" / name).string()))
            << name;
}

TEST_F(CliTest, AnalyzeJobsAndSnapshots) {
    std::ostringstream out, err;
    auto a = analyze_config(kFixtures / "seed42.jsonl", dir_ / "a");
    auto b = analyze_config(kFixtures / "seed42.jsonl", dir_ / "b");
    a.snapshots = b.snapshots = true;
    b.jobs = 8;
    ASSERT_EQ(cmd_analyze(a, out, err), kExitOk);
    ASSERT_EQ(cmd_analyze(b, out, err), kExitOk);
    for (const auto& entry : fs::directory_iterator(dir_ / "a"))
        EXPECT_EQ(read_text(entry.path().string()),
                  read_text((dir_ / "b" / entry.path().filename()).string()));
    EXPECT_TRUE(fs::exists(dir_ / "a" / "snapshots.jsonl"));
}

TEST_F(CliTest, AnalyzeFailureLeavesOutputsUntouched) {
    auto outdir = dir_ / "o";
    fs::create_directories(outdir);
    write(outdir / "mt.csv", "previous\n");
    auto input = dir_ / "broken.jsonl";
    write(input, read_text((kFixtures / "tiny_seed1.jsonl").string()) + "{oops\n");
    std::ostringstream out, err;
    EXPECT_EQ(cmd_analyze(analyze_config(input, outdir), out, err), kExitError);
    EXPECT_EQ(read_text((outdir / "mt.csv").string()), "previous\n");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(outdir))
        ++files;
    EXPECT_EQ(files, 1u);
}

TEST_F(CliTest, AnalyzeReplayRejectionSurfaced) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_analyze(analyze_config(kFixtures / "vote_cap.jsonl", dir_ / "o"), out, err),
              kExitError);
    EXPECT_NE(err.str().find("VoteCapExceeded"), std::string::npos);
}

TEST_F(CliTest, SynthTinyMatchesCommittedFixture) {
    auto cfg = load_run_config("", {{"synth", R"({"holders":5,"candidates":4,"days":3,"committee_size":3,"seed":1})"}});
    std::ostringstream out, err;
    ASSERT_EQ(cmd_synth(cfg, dir_ / "t.jsonl", out, err), kExitOk);
    EXPECT_EQ(read_text((dir_ / "t.jsonl").string()),
              read_text((kFixtures / "tiny_seed1.jsonl").string()));
    EXPECT_NE(out.str().find("5 holders, 3 days"), std::string::npos);
}

TEST_F(CliTest, SynthInvalidConfig) {
    auto cfg = load_run_config("", {});
    cfg.synth.revote_prob = 2.0;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_synth(cfg, dir_ / "t.jsonl", out, err), kExitError);
    EXPECT_FALSE(fs::exists(dir_ / "t.jsonl"));
}

TEST(RunConfigLoad, OverridesAndUnknownKeys) {
    auto cfg = load_run_config(R"({"mode":"pow","metrics":{"top_l":7}})",
                               {{"metrics.threshold", "0.67"}, {"engine.committee_size", "17"}});
    EXPECT_EQ(cfg.mode, Mode::Pow);
    EXPECT_EQ(cfg.metrics.top_l, 7u);
    EXPECT_EQ(cfg.metrics.threshold.to_string(), "0.670000");
    EXPECT_EQ(cfg.engine.committee_size, 17u);
    EXPECT_THROW(load_run_config(R"({"colour":1})", {}), Error);
    EXPECT_THROW(load_run_config("", {{"metrics.threshold", "1.5"}}), Error);
    EXPECT_THROW(load_run_config("", {{"mode", "pos"}}), Error);
}

TEST(RunConfigLoad, SeedFromEnvironment) {
    auto cfg = load_run_config("", {});
    ::setenv("DECENT_METER_SEED", "1234", 1);
    apply_environment(cfg);
    EXPECT_EQ(cfg.synth.seed, 1234u);
    ::setenv("DECENT_METER_SEED", "x1", 1);
    EXPECT_THROW(apply_environment(cfg), Error);
    ::unsetenv("DECENT_METER_SEED");
}

TEST_F(CliTest, BinaryExitCodes) {
    std::string text;
    EXPECT_EQ(run("version", &text), 0);
    EXPECT_EQ(text.rfind("decent-meter 0.1.0", 0), 0u);
    EXPECT_EQ(run("ingest \"" + (kFixtures / "tiny_seed1.jsonl").string() + "\" \"" +
                  (dir_ / "n.jsonl").string() + "\""),
              0);
    EXPECT_EQ(run("ingest \"" + (kFixtures / "vote_cap.jsonl").string() + "\" \"" +
                  (dir_ / "n.jsonl").string() + "\""),
              2);
    EXPECT_EQ(run("ingest \"" + (dir_ / "missing.jsonl").string() + "\" \"" +
                  (dir_ / "n.jsonl").string() + "\""),
              1);
    EXPECT_NE(stderr_text().find("missing.jsonl"), std::string::npos);
    EXPECT_EQ(run("analyze --input \"" + (dir_ / "missing.jsonl").string() + "\""), 1);
    EXPECT_EQ(run("bogus"), 1);
}

TEST_F(CliTest, BinarySynthAndAnalyzeFlags) {
    auto log = dir_ / "s.jsonl";
    EXPECT_EQ(run("synth \"" + log.string() +
                  "\" --set synth.holders=5 --set synth.candidates=4 --set synth.days=3 "
                  "--committee-size 3 --set synth.seed=1"),
              0);
    EXPECT_EQ(read_text(log.string()), read_text((kFixtures / "tiny_seed1.jsonl").string()));

    ::setenv("DECENT_METER_SEED", "1", 1);
    auto env_log = dir_ / "e.jsonl";
    EXPECT_EQ(run("synth \"" + env_log.string() +
                  "\" --set synth.holders=5 --set synth.candidates=4 --set synth.days=3 "
                  "--committee-size 3 --set synth.seed=999"),
              0);
    ::unsetenv("DECENT_METER_SEED");
    EXPECT_EQ(read_text(env_log.string()), read_text(log.string()));

    auto out1 = dir_ / "o1", out8 = dir_ / "o8";
    auto base = "analyze --input \"" + (kFixtures / "seed42.jsonl").string() +
                "\" --mode dpos --threshold 0.5 --top-l 50 --bucket-days 30 --snapshots";
    EXPECT_EQ(run(base + " --jobs 1 --out \"" + out1.string() + "\""), 0);
    EXPECT_EQ(run(base + " --jobs 8 --out \"" + out8.string() + "\""), 0);
    for (const auto& entry : fs::directory_iterator(out1))
        EXPECT_EQ(read_text(entry.path().string()), read_text((out8 / entry.path().filename()).string()));
    EXPECT_EQ(run("analyze --input \"" + (kFixtures / "seed42.jsonl").string() + "\" --threshold 1.2"), 1);
}

TEST_F(CliTest, ConfigFileDrivesAnalyze) {
    auto config = dir_ / "run.json";
    write(config, R"({"mode":"dpos","input":")" + (kFixtures / "seed42.jsonl").string() +
                      R"(","out":")" + (dir_ / "o").string() + R"(","metrics":{"bucket_days":10}})");
    EXPECT_EQ(run("analyze --config \"" + config.string() + "\" --top-l 3"), 0);
    auto heat = read_text((dir_ / "o" / "heatmap.csv").string());
    EXPECT_EQ(heat.substr(0, heat.find('\n')), "producer,b0,b1,b2");
    EXPECT_EQ(std::count(heat.begin(), heat.end(), '\n'), 4);
}

} // namespace
} // namespace decent::cli
