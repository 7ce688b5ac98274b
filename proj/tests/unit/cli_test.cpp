#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <set>
#include <sstream>

#include "helpers.h"
#include "refutelint/driver/driver.h"

using namespace refutelint;
using testutil::shell;

namespace {

const std::string kCli = REFUTELINT_CLI;
const std::string kSamples = std::string(REFUTELINT_SOURCE_DIR) + "/samples";
const std::string kCorpus = std::string(REFUTELINT_SOURCE_DIR) + "/corpus";

std::string cli(const std::string& args) { return "cd '" + kSamples + "' && '" + kCli + "' " + args + " 2>/dev/null"; }

}  // namespace

TEST(Cli, ParityWithoutRefutation) {
  const auto r = shell(cli("--crosscheck-with-smt=false main.c"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("main.c:4:12: warning: Dereference of null pointer (loaded from variable 'z')"),
            std::string::npos);
  EXPECT_NE(r.out.find("1 warning generated."), std::string::npos);
}

TEST(Cli, ParityWithRefutation) {
  const auto r = shell(cli("--crosscheck-with-smt=true main.c"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0 warnings generated.\n");
  const auto shown = shell(cli("--show-refuted main.c"));
  EXPECT_EQ(shown.status, 0);
  EXPECT_NE(shown.out.find("[refuted]"), std::string::npos);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(shell(cli("does_not_exist.c")).status, 2);
  EXPECT_EQ(shell(cli("--timeout-ms=0 main.c")).status, 2);
  EXPECT_EQ(shell(cli("--format=xml main.c")).status, 2);
}

TEST(Cli, JsonFormat) {
  const auto r = shell(cli("--format=json main.c"));
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["status"], "refuted");
  EXPECT_EQ(j[0]["checker"], "core.NullDereference");
  EXPECT_EQ(j[0]["file"], "main.c");
}

TEST(Driver, RunExitCodes) {
  driver::RunConfig cfg;
  cfg.inputs = {kSamples + "/main.c"};
  std::ostringstream out, err;
  EXPECT_EQ(driver::run(cfg, out, err), 0);
  cfg.crosscheck_with_smt = false;
  EXPECT_EQ(driver::run(cfg, out, err), 1);
  cfg.inputs = {kSamples + "/missing.c"};
  EXPECT_EQ(driver::run(cfg, out, err), 2);
}

TEST(Driver, ConfirmedSubsetOfUnrefuted) {
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus)) {
    if (entry.path().extension() != ".c") continue;
    driver::RunConfig on, off;
    off.crosscheck_with_smt = false;
    const auto a = driver::analyzeFile(entry.path().string(), on);
    const auto b = driver::analyzeFile(entry.path().string(), off);
    ASSERT_TRUE(a.error.empty()) << a.error;
    std::set<std::pair<uint32_t, uint32_t>> unrefuted;
    for (const auto& r : b.reports) unrefuted.insert({r.loc.line, r.loc.column});
    EXPECT_EQ(a.reported, b.reported);
    EXPECT_EQ(b.refuted, 0u);
    for (const auto& r : a.reports)
      if (r.status() == reports::ReportStatus::Confirmed)
        EXPECT_TRUE(unrefuted.count({r.loc.line, r.loc.column})) << entry.path();
  }
}

TEST(Driver, EmptyCorpus) {
  const auto dir = std::filesystem::temp_directory_path() / "refutelint_empty_corpus";
  std::filesystem::create_directories(dir);
  const auto t = driver::runCorpus(dir.string(), driver::RunConfig{});
  EXPECT_TRUE(t.rows.empty());
  EXPECT_EQ(t.totals.reported, 0u);
  EXPECT_EQ(t.totals.refuted, 0u);
  EXPECT_EQ(t.max_query_seconds, 0);
  EXPECT_NE(driver::renderTable(t).find("time-no-ref"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Driver, SyntaxErrorIsReportedNotThrown) {
  const auto r = driver::analyzeSource("bad.c", "int f( {", driver::RunConfig{});
  EXPECT_FALSE(r.error.empty());
  EXPECT_TRUE(r.reports.empty());
}
