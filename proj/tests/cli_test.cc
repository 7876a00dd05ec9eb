#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "modrc/serialize.h"

namespace modrc {
namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

TEST(Cli, ClassifyJson) {
  const Json j = run_json({"classify", "--g", "2", "--r", "2", "--d", "1", "--k", "2"});
  EXPECT_EQ(j.at("schemaVersion"), kSchemaVersion);
  EXPECT_EQ(j.at("command"), "classify");
  EXPECT_EQ(j.at("results").at("totals").at("unobstructed"), 1);
  EXPECT_EQ(j.at("results").at("totals").at("obstructedExpected"), 1);
  const ClassificationReport rep = report_from_json(j.at("results"));
  EXPECT_EQ(rep, classify(derive_params(2, 2, 1), 2));
}

TEST(Cli, ClassifyCandidates) {
  const Json j = run_json({"classify", "--g", "3", "--r", "2", "--d", "1", "--k", "4", "--include-candidates"});
  const auto& comps = j.at("results").at("components");
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[1].at("genericImage"), "NON_GENERIC");
  EXPECT_EQ(comps[1].at("status"), "PROVED_COMPONENT");
  EXPECT_EQ(comps[1].at("datum").at("twists"), Json::array({4}));
  EXPECT_EQ(j.at("warnings").size(), 1u);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({"classify", "--g", "2", "--r", "2", "--d", "1", "--k", "0"}).code, 1);
  EXPECT_EQ(run({"classify", "--g", "1", "--r", "2", "--d", "1", "--k", "1"}).code, 1);
  EXPECT_EQ(run({"classify", "--g", "2", "--r", "1", "--d", "1", "--k", "1"}).code, 1);
  EXPECT_EQ(run({"classify", "--g", "2", "--r", "2", "--d", "1"}).code, 1);
  EXPECT_EQ(run({"classify", "--g", "2", "--r", "2", "--d", "1", "--k", "1", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"verify", "--suite", "everything"}).code, 1);
  EXPECT_EQ(run({"segre", "--g", "2", "--r", "3", "--d", "1", "--r-prime", "3"}).code, 1);
  const CliRun overflow = run({"classify", "--g", "2", "--r", "3037000500", "--d", "1", "--k", "1"});
  EXPECT_EQ(overflow.code, 1);
  EXPECT_NE(overflow.err.find("overflow"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SweepCounts) {
  const CliRun r = run({"sweep", "--g", "2", "--r", "2", "--d", "1", "--k-min", "1", "--k-max", "6"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.find(',') + 1, 2), "1,");
  }
  EXPECT_EQ(rows, 6);

  const Json j = run_json({"sweep", "--g", "2", "--r", "4", "--d", "2", "--k-min", "1", "--k-max", "8"});
  for (const Json& row : j.at("results").at("rows")) EXPECT_EQ(row.at("unobstructed"), 2);
  EXPECT_EQ(run({"sweep", "--g", "2", "--r", "2", "--d", "1", "--k-min", "5", "--k-max", "4"}).code, 1);
}

TEST(Cli, SweepWritesFileAtomically) {
  const auto dir = std::filesystem::temp_directory_path() / "modrc_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "rows.csv").string();
  const std::vector<std::string> base{"sweep", "--g", "2", "--r", "3", "--d", "1", "--k-min", "1", "--k-max", "5"};

  std::vector<std::string> args = base;
  args.insert(args.end(), {"--out", path});
  const CliRun r = run(args);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, run(base).out);
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));

  const std::string bad = (dir / "missing" / "rows.csv").string();
  args = base;
  args.insert(args.end(), {"--out", bad});
  EXPECT_EQ(run(args).code, 1);
  EXPECT_FALSE(std::filesystem::exists(bad));
  EXPECT_FALSE(std::filesystem::exists(bad + ".tmp"));

  args = {"sweep", "--g", "2", "--r", "3", "--d", "1", "--k-min", "0", "--k-max", "5", "--out", path + "2"};
  EXPECT_EQ(run(args).code, 1);
  EXPECT_FALSE(std::filesystem::exists(path + "2"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifySuites) {
  const Json tele = run_json({"verify", "--suite", "telescoping", "--trials", "10000", "--seed", "7"});
  ASSERT_EQ(tele.at("results").at("suites").size(), 1u);
  EXPECT_EQ(tele.at("results").at("suites")[0].at("failures"), 0);
  EXPECT_TRUE(tele.at("warnings").empty());

  const Json ids = run_json({"verify", "--suite", "identities"});
  const auto& suites = ids.at("results").at("suites");
  ASSERT_EQ(suites.size(), 2u);
  EXPECT_EQ(suites[0].at("pass"), true);
  EXPECT_EQ(suites[1].at("pass"), false);
  EXPECT_EQ(suites[1].at("asExpected"), true);
  EXPECT_FALSE(suites[1].at("counterexamples").empty());
  ASSERT_EQ(ids.at("warnings").size(), 1u);

  EXPECT_EQ(run({"verify", "--suite", "claim"}).code, 0);
  // With no trials the minus-sign form cannot be refuted, which is an unexpected outcome.
  EXPECT_EQ(run({"verify", "--suite", "identities", "--trials", "0"}).code, 2);
}

TEST(Cli, SegreAndConnect) {
  const Json s = run_json({"segre", "--g", "2", "--r", "3", "--d", "1", "--r-prime", "1"});
  const Json& row = s.at("results").at("rows")[0];
  EXPECT_EQ(row.at("genericS"), 4);
  ASSERT_EQ(row.at("strata").size(), 2u);
  EXPECT_EQ(row.at("strata")[0].at("s"), 1);
  EXPECT_EQ(row.at("strata")[0].at("codim"), 1);
  EXPECT_EQ(row.at("strata")[1].at("s"), 4);
  EXPECT_EQ(row.at("strata")[1].at("codim"), 0);

  const Json even = run_json({"connect", "--g", "2", "--r", "2", "--d", "0"});
  EXPECT_EQ(even.at("results").at("connecting").at("derivedK"), 1);
  EXPECT_EQ(even.at("results").at("connecting").at("closedFormK"), 1);
  EXPECT_TRUE(even.at("warnings").empty());

  const Json odd = run_json({"connect", "--g", "2", "--r", "2", "--d", "1"});
  EXPECT_EQ(odd.at("results").at("connecting").at("derivedK"), 3);
  EXPECT_EQ(odd.at("results").at("connecting").at("closedFormK"), 1);
  EXPECT_EQ(odd.at("warnings").size(), 1u);

  const CliRun table = run({"connect", "--g", "2", "--r", "2", "--d", "1"});
  EXPECT_NE(table.err.find("warning:"), std::string::npos);
}

TEST(Cli, OutputIsByteReproducibleAndRoundTrips) {
  const std::vector<std::vector<std::string>> commands{
      {"classify", "--g", "2", "--r", "3", "--d", "1", "--k", "9", "--include-candidates", "--include-mixed"},
      {"sweep", "--g", "3", "--r", "4", "--d", "2", "--k-min", "1", "--k-max", "12", "--include-candidates"},
      {"verify", "--suite", "all", "--trials", "2000", "--seed", "42", "--grid-k-max", "6"},
      {"segre", "--g", "3", "--r", "5", "--d", "2"},
      {"connect", "--g", "4", "--r", "5", "--d", "3"},
  };
  for (auto args : commands) {
    args.insert(args.end(), {"--format", "json"});
    const CliRun a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const Json j = Json::parse(a.out);
    const OutputEnvelope env = j.get<OutputEnvelope>();
    EXPECT_EQ(print(Json(env)), a.out);
  }
}

}  // namespace
}  // namespace modrc
