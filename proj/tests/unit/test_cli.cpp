#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "rlab/cli/app.hpp"
#include "rlab/cli/suites.hpp"
#include "rlab/core/io.hpp"

using namespace rlab;
using namespace rlab::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run_quiet(std::vector<std::string> args) {
  args.insert(args.begin(), "resetting-lab");
  testing::internal::CaptureStdout();
  testing::internal::CaptureStderr();
  const int code = run(args);
  Result r{code, testing::internal::GetCapturedStdout()};
  testing::internal::GetCapturedStderr();
  return r;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rlab_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, NoSubcommandIsUsageError) { EXPECT_EQ(run_quiet({}).code, kUsageError); }

TEST_F(CliTest, UnknownFlagIsUsageError) {
  EXPECT_EQ(run_quiet({"verify", "--suite", "identities", "--bogus"}).code, kUsageError);
}

TEST_F(CliTest, UnknownSuiteIsUsageError) { EXPECT_EQ(run_quiet({"verify", "--suite", "nope"}).code, kUsageError); }

TEST_F(CliTest, InvalidRateIsUsageError) {
  EXPECT_EQ(run_quiet({"verify", "--suite", "stationary", "--r", "-1"}).code, kUsageError);
  EXPECT_EQ(run_quiet({"simulate", "--kind", "x+", "--r", "-1", "--T", "1", "--dt", "0.01"}).code, kUsageError);
}

TEST_F(CliTest, NonIntegerPathCountIsUsageError) {
  EXPECT_EQ(run_quiet({"simulate", "--paths", "2.5", "--T", "1", "--dt", "0.01"}).code, kUsageError);
}

TEST_F(CliTest, AnalyticWithoutActionIsUsageError) { EXPECT_EQ(run_quiet({"analytic"}).code, kUsageError); }

TEST_F(CliTest, HelpExitsCleanly) { EXPECT_EQ(run_quiet({"--help"}).code, kPass); }

TEST_F(CliTest, VerifyIdentitiesWritesJsonLines) {
  const auto report = path("rep.jsonl");
  ASSERT_EQ(run_quiet({"verify", "--suite", "identities", "--report", report}).code, kPass);
  const auto lines = lines_of(report);
  ASSERT_GE(lines.size(), 2u);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const auto j = nlohmann::json::parse(lines[i]);
    EXPECT_TRUE(j.contains("name"));
    EXPECT_TRUE(j.at("passed").get<bool>()) << lines[i];
  }
  const auto summary = nlohmann::json::parse(lines.back());
  EXPECT_TRUE(summary.at("summary").get<bool>());
  EXPECT_TRUE(summary.at("ok").get<bool>());
  EXPECT_EQ(summary.at("reports").get<std::size_t>(), lines.size() - 1);
  EXPECT_EQ(summary.at("failed").get<std::size_t>(), 0u);
  EXPECT_TRUE(summary.contains("config"));
  EXPECT_TRUE(summary.contains("timestamp"));
  for (const auto& e : fs::directory_iterator(dir_)) EXPECT_EQ(e.path().filename(), "rep.jsonl");
}

TEST_F(CliTest, VerificationFailureExitsOne) {
  // At alpha close to 1 the KS critical value is tiny, so rejection is certain.
  const auto report = path("rep.jsonl");
  EXPECT_EQ(run_quiet({"verify", "--suite", "stationary", "--r", "1", "--paths", "200", "--alpha", "0.9999",
                       "--report", report})
                .code,
            kVerificationFailure);
  const auto summary = nlohmann::json::parse(lines_of(report).back());
  EXPECT_FALSE(summary.at("ok").get<bool>());
}

TEST_F(CliTest, ReportsAreReproducible) {
  const auto a = path("a.jsonl");
  const auto b = path("b.jsonl");
  ASSERT_EQ(run_quiet({"trace-verify", "--r", "1", "--paths", "300", "--seed", "5", "--dt", "1e-2", "--report", a}).code,
            run_quiet({"trace-verify", "--r", "1", "--paths", "300", "--seed", "5", "--dt", "1e-2", "--report", b}).code);
  auto la = lines_of(a);
  auto lb = lines_of(b);
  ASSERT_EQ(la.size(), lb.size());
  for (std::size_t i = 0; i + 1 < la.size(); ++i) EXPECT_EQ(la[i], lb[i]);
  auto sa = nlohmann::json::parse(la.back());
  auto sb = nlohmann::json::parse(lb.back());
  sa.erase("timestamp");
  sb.erase("timestamp");
  EXPECT_EQ(sa, sb);
}

TEST_F(CliTest, ThreadCapAppearsInSummary) {
  ::setenv("RESETTING_LAB_THREADS", "1", 1);
  const auto report = path("rep.jsonl");
  run_quiet({"verify", "--suite", "identities", "--report", report});
  ::unsetenv("RESETTING_LAB_THREADS");
  EXPECT_EQ(nlohmann::json::parse(lines_of(report).back()).at("threads").get<int>(), 1);
}

TEST_F(CliTest, SimulateWritesPathsAndEvents) {
  const auto events = path("events.json");
  ASSERT_EQ(run_quiet({"simulate", "--kind", "x+", "--r", "2", "--T", "1", "--dt", "1e-2", "--paths", "3", "--seed",
                       "4", "--out", path("paths"), "--events-out", events})
                .code,
            kPass);
  for (int i = 0; i < 3; ++i) {
    std::ostringstream name;
    name << "path_" << std::setw(6) << std::setfill('0') << i << ".csv";
    const auto lines = lines_of(dir_ / "paths" / name.str());
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines.front(), "t,x,gamma");
    EXPECT_EQ(lines[1], "0,0,0");
  }
  std::ifstream in(events);
  const auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j.size(), 3u);
  const auto log = event_log_from_json(j[0]);
  EXPECT_EQ(log.reset_times.size(), log.pre_reset_positions.size());
}

TEST_F(CliTest, SimulateAcceptsScientificCounts) {
  EXPECT_EQ(run_quiet({"simulate", "--kind", "bm", "--T", "1", "--dt", "1e-2", "--paths", "2e0", "--out", path("p")}).code,
            kPass);
  EXPECT_TRUE(fs::exists(dir_ / "p" / "path_000001.csv"));
}

TEST_F(CliTest, ReverseLogsBoundaryJumps) {
  const auto events = path("events.json");
  ASSERT_EQ(run_quiet({"reverse", "--r", "4", "--init", "stationary", "--T", "2", "--dt", "1e-3", "--paths", "2",
                       "--out", path("rev"), "--events-out", events})
                .code,
            kPass);
  std::ifstream in(events);
  const auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0].contains("boundary_jumps"));
  EXPECT_EQ(lines_of(dir_ / "rev" / "path_000000.csv").front(), "t,x,gamma");
}

TEST_F(CliTest, PdeWritesGrid) {
  const auto out = path("u.csv");
  ASSERT_EQ(run_quiet({"pde", "--problem", "nlbvp", "--r", "1", "--f", "expneg", "--dx", "0.05", "--dt", "1e-2",
                       "--t-stride", "10", "--out", out})
                .code,
            kPass);
  const auto lines = lines_of(out);
  ASSERT_GT(lines.size(), 2u);
  EXPECT_EQ(lines.front(), "t,x,u");
  EXPECT_EQ(lines[1].rfind("0,0,1", 0), 0u);
}

TEST_F(CliTest, PdeRejectsBadDatum) {
  EXPECT_EQ(run_quiet({"pde", "--f", "indicator:2,1"}).code, kUsageError);
  EXPECT_EQ(run_quiet({"pde", "--f", "wiggle"}).code, kUsageError);
}

TEST_F(CliTest, TraceWritesSamples) {
  const auto out = path("trace.csv");
  ASSERT_EQ(run_quiet({"trace", "--which", "oracle", "--r", "1", "--paths", "50", "--out", out}).code, kPass);
  const auto lines = lines_of(out);
  EXPECT_EQ(lines.front(), "which,t,value,stopping_time");
  EXPECT_EQ(lines.size(), 51u);
}

TEST_F(CliTest, AnalyticCheckAndTable) {
  EXPECT_EQ(run_quiet({"analytic", "--check"}).code, kPass);
  const auto out = path("phi.csv");
  ASSERT_EQ(run_quiet({"analytic", "--table", "phi", "--r", "0", "--lo", "1", "--hi", "4", "--n", "4", "--out", out}).code,
            kPass);
  const auto lines = lines_of(out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[1], "1,1");
  EXPECT_EQ(lines[4], "4,2");
}

TEST(Suites, NamesEndWithAll) {
  const auto& names = suite_names();
  ASSERT_FALSE(names.empty());
  EXPECT_EQ(names.back(), "all");
  for (const char* s : {"stationary", "localtime", "reversal", "duality", "pde", "trace", "identities"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), s), names.end()) << s;
  }
  EXPECT_THROW(run_suite("nope", SuiteConfig{}), std::invalid_argument);
}

TEST(Suites, ReportJsonFields) {
  VerificationReport rep;
  rep.name = "x";
  rep.passed = true;
  const auto j = cli::to_json(rep);
  for (const char* k : {"name", "statistic", "target", "tolerance", "passed", "n", "seed", "dt", "p_value", "details"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_TRUE(all_passed({rep}));
  rep.passed = false;
  EXPECT_FALSE(all_passed({rep}));
}

TEST(Suites, SmallRunsPass) {
  SuiteConfig cfg;
  cfg.paths = 2000;
  cfg.seed = 7;
  for (const char* s : {"identities", "localtime", "reversal"}) {
    const auto reps = run_suite(s, cfg);
    EXPECT_FALSE(reps.empty());
    // Small-N smoke run: a KS check may reject at alpha by chance, but not far out in the tail.
    for (const auto& r : reps) {
      if (std::isfinite(r.p_value)) {
        EXPECT_GT(r.p_value, 1e-4) << s << ": " << r.name;
      } else {
        EXPECT_TRUE(r.passed) << s << ": " << r.name << " " << r.details;
      }
    }
  }
}
