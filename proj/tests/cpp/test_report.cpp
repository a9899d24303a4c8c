#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "idemlab/corpus.hpp"
#include "idemlab/error.hpp"
#include "idemlab/oracles.hpp"
#include "idemlab/report.hpp"

#ifndef IDEMLAB_DATA_DIR
#error "IDEMLAB_DATA_DIR must be defined"
#endif

using namespace idemlab;

namespace {

const std::filesystem::path kCorpus = std::filesystem::path(IDEMLAB_DATA_DIR) / "corpus";

std::filesystem::path temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("idemlab-report-" + tag + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Report, InfoExamples) {
  Session s;
  EXPECT_EQ(info_report(alternating_group(5), s)["h2"], Json::array({2}));
  Json z12 = info_report(cyclic_group(12), s);
  EXPECT_EQ(z12["h1"], Json::array({12}));
  EXPECT_EQ(z12["h2"], Json::array());
  Json s3 = info_report(symmetric_group(3), s);
  EXPECT_EQ(s3["h1"], Json::array({2}));
  EXPECT_EQ(s3["h2"], Json::array());
  EXPECT_EQ(s3["solvable"], true);
  EXPECT_EQ(s3["nilpotent"], false);
}

TEST(Report, CoversExamples) {
  Session s;
  Json a5 = covers_report(alternating_group(5), s);
  EXPECT_EQ(a5["sur_gensub_count"], 2);
  EXPECT_EQ(a5["sur_cov_count"], 2);
  Json z8 = covers_report(cyclic_group(8), s);
  EXPECT_EQ(z8["sur_gensub_count"], 1);
}

TEST(Report, IdemExamples) {
  Session s;
  Json a5 = idem_report(alternating_group(5), s, 0, true);
  EXPECT_EQ(a5["idem_inf_size"], 4);
  std::vector<std::size_t> orders;
  for (const auto& m : a5["idem_inf_members"]) orders.push_back(m["order"].get<std::size_t>());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 60, 120}));
  EXPECT_EQ(idem_report(cyclic_group(7), s)["idem_size"], 2);
  EXPECT_EQ(idem_report(trivial_group(), s)["idem_size"], 1);
}

TEST(Report, BundledCorpusPasses) {
  Session s;
  VerifyOutcome out = verify_table(kCorpus, s);
  EXPECT_EQ(out.failed, 0u);
  EXPECT_EQ(out.skipped, 0u);
  EXPECT_EQ(out.passed, 6u);
  for (const auto& r : out.report["records"]) EXPECT_EQ(r["match"], true) << r["group"];
}

TEST(Report, CorruptedExpectationFailsWithDiff) {
  auto dir = temp_dir("corrupt");
  std::filesystem::copy_file(kCorpus / "A5.grp", dir / "A5.grp");
  std::ofstream(dir / "expected.json")
      << R"({"groups": [{"file": "A5.grp", "row": "A_n", "h2": [2], "exp": 2, "sigma0": 2, "idem": 4}]})";
  Session s;
  VerifyOutcome out = verify_table(dir, s);
  EXPECT_EQ(out.failed, 1u);
  const Json& rec = out.report["records"][0];
  EXPECT_EQ(rec["status"], "FAIL");
  EXPECT_EQ(rec["match"], false);
  ASSERT_EQ(rec["diff"].size(), 1u);
  EXPECT_NE(rec["diff"][0].get<std::string>().find("idem_size"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Report, EmptyCorpusPassesWithWarning) {
  auto dir = temp_dir("empty");
  Session s;
  VerifyOutcome out = verify_table(dir, s);
  EXPECT_EQ(out.passed + out.failed + out.skipped, 0u);
  EXPECT_EQ(out.warnings.size(), 1u);
  std::filesystem::remove_all(dir);
}

TEST(Report, CappedEntriesAreSkipped) {
  Limits lim;
  lim.h2_cap = 100;
  Session s(lim);
  VerifyOutcome out = verify_table(kCorpus, s);
  EXPECT_EQ(out.failed, 0u);
  EXPECT_EQ(out.skipped, 2u);
}

TEST(Report, ReportsAreDeterministic) {
  auto dir = temp_dir("cache");
  Session cold(Limits{}, dir);
  std::string first = verify_table(kCorpus, cold).report.dump(2);
  Session warm(Limits{}, dir);
  std::string second = verify_table(kCorpus, warm).report.dump(2);
  Session plain;
  std::string third = verify_table(kCorpus, plain).report.dump(2);
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, third);
  std::filesystem::remove_all(dir);
}

TEST(Oracles, UnknownSuiteListsTheAvailableOnes) {
  Session s;
  try {
    run_oracle("nope", s);
    FAIL() << "expected an error";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("charcCmono"), std::string::npos);
  }
}

TEST(Oracles, QuickSuitesPass) {
  Session s;
  for (const std::string name : {"abelianmodule", "iteration", "simpletargets"}) {
    OracleReport r = run_oracle(name, s);
    EXPECT_TRUE(r.passed()) << name << ": " << (r.messages.empty() ? "" : r.messages[0]);
    EXPECT_GT(r.checks, 0u);
  }
}
