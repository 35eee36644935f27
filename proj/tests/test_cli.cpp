#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kvv/scenario.hpp"

namespace {

const std::string kCli = KVV_CLI_PATH;
const std::string kData = KVV_DATA_DIR;

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kvv-cli-" + name);
}

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST(Cli, ReproPasses) { EXPECT_EQ(run("repro"), 0); }

TEST(Cli, ReproJsonMatchesGolden) {
  const auto out = scratch("repro.json");
  ASSERT_EQ(run("repro --format json --out " + out.string()), 0);
  EXPECT_EQ(read_file(out), read_file(kData + "/keel-mckernan-p3.expected.json"));
}

TEST(Cli, RunBundledScenario) {
  const auto out = scratch("run.json");
  ASSERT_EQ(run("run --scenario " + kData + "/keel-mckernan-p3.json --format json --out " + out.string()), 0);
  EXPECT_EQ(read_file(out), read_file(kData + "/keel-mckernan-p3.expected.json"));
}

TEST(Cli, ExportScenarioMatchesBundledFile) {
  const auto out = scratch("export.json");
  ASSERT_EQ(run("export-scenario --out " + out.string()), 0);
  EXPECT_EQ(read_file(out), read_file(kData + "/keel-mckernan-p3.json"));
}

TEST(Cli, FailingCheckExitsOne) {
  kvv::Scenario s = kvv::keel_mckernan_scenario();
  for (auto& c : s.checks)
    if (c.id == "picard-rank") c.params["expect"] = 2;
  const auto path = scratch("failing.json");
  std::ofstream(path) << kvv::to_json(s).dump(2);
  EXPECT_EQ(run("run --scenario " + path.string()), 1);
}

TEST(Cli, InvalidInputExitsTwo) {
  const auto path = scratch("invalid.json");
  std::ofstream(path) << R"({"base": "quadric", "blowups": [{"exceptional": "E", "incident": [{"curve": "Q"}]}]})";
  EXPECT_EQ(run("run --scenario " + path.string()), 2);
  EXPECT_EQ(run("run --scenario /nonexistent.json"), 2);
  EXPECT_EQ(run("run"), 2);
  EXPECT_EQ(run("repro --format yaml"), 2);
  EXPECT_EQ(run("explore --p 3 --points 2"), 2);
  EXPECT_EQ(run("explore --p 1 --points 3"), 2);
  EXPECT_EQ(run("repro --out /nonexistent-dir/report.txt"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST(Cli, Explore) {
  const auto out = scratch("explore.json");
  ASSERT_EQ(run("explore --p 5 --points 3 --format json --out " + out.string()), 0);
  const auto doc = kvv::Json::parse(read_file(out));
  EXPECT_EQ(doc["exploration"]["degree_minus_k"], "-1");
  EXPECT_EQ(doc["exploration"]["verdict"], "canonically_ample");
}

TEST(Cli, Help) { EXPECT_EQ(run("--help"), 0); }
