#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "kvv/repro.hpp"

using namespace kvv;

namespace {

const std::string kExpected = std::string(KVV_DATA_DIR) + "/keel-mckernan-p3.expected.json";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const CheckResult& find(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw std::runtime_error("no check " + id);
}

std::string rendered(const Report& r, ReportFormat f) {
  std::ostringstream out;
  emit_report(r, f, "", out);
  return out.str();
}

}  // namespace

TEST(Repro, AllChecksPassOnce) {
  const Report r = run_repro();
  EXPECT_TRUE(r.passed()) << r.first_failure().value_or("");
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.checks.size(), keel_mckernan_scenario().checks.size());
  std::set<std::string> ids;
  for (const auto& c : r.checks) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.citation.empty()) << c.id;
  }
}

TEST(Repro, ReportedValues) {
  const Report r = run_repro();
  EXPECT_EQ(find(r, "kvv-failure").values["euler_characteristic"], "-1");
  EXPECT_EQ(find(r, "cone").values["r"], "-1");
  EXPECT_EQ(find(r, "singular-points").values["total"], 7);
  const Json& d = find(r, "discrepancies").values["values"];
  int thirds = 0;
  int zeros = 0;
  for (const auto& [name, value] : d.items()) {
    thirds += value == "-1/3";
    zeros += value == "0";
  }
  EXPECT_EQ(thirds, 4);
  EXPECT_EQ(zeros, 6);
}

TEST(Repro, MatchesGoldenReport) {
  EXPECT_EQ(rendered(run_repro(), ReportFormat::Json), read_file(kExpected));
}

TEST(Repro, Deterministic) {
  EXPECT_EQ(rendered(run_repro(), ReportFormat::Json), rendered(run_repro(), ReportFormat::Json));
  EXPECT_EQ(rendered(run_repro(), ReportFormat::Text), rendered(run_repro(), ReportFormat::Text));
  EXPECT_EQ(rendered(explore_frobenius(5, 3), ReportFormat::Json), rendered(explore_frobenius(5, 3), ReportFormat::Json));
}

TEST(Repro, ZeroPolarizationFailsTheExpectationBlock) {
  Scenario s = keel_mckernan_scenario();
  for (auto& d : s.divisors)
    if (d.name == "A") d.expr = DivisorExpr{};
  const Report r = run_scenario(s);
  EXPECT_EQ(r.exit_code(), 1);
  const CheckResult& kvv = find(r, "kvv-failure");
  EXPECT_FALSE(kvv.passed);
  EXPECT_EQ(kvv.values["euler_characteristic"], "1");
  EXPECT_EQ(kvv.values["h1_nonzero"], false);
  EXPECT_FALSE(find(r, "cone").passed);
  EXPECT_FALSE(find(r, "cone").error.empty());
  EXPECT_TRUE(find(r, "intersection-table").passed);
}

TEST(Repro, MissingCurveInContractionFailsAtRank) {
  Scenario s = keel_mckernan_scenario();
  s.contraction.erase(s.contraction.begin());
  const Report r = run_scenario(s);
  EXPECT_EQ(r.exit_code(), 1);
  const CheckResult& rank = find(r, "picard-rank");
  EXPECT_FALSE(rank.passed);
  EXPECT_EQ(rank.values["target_rank"], 2);
  ASSERT_FALSE(rank.mismatches.empty());
  EXPECT_EQ(rank.mismatches.front(), "target_rank: expected 1, got 2");
  EXPECT_FALSE(find(r, "degree-A").error.empty());
  EXPECT_EQ(*r.first_failure(), "canonical-pullback: " + find(r, "canonical-pullback").mismatches.front());
}

TEST(Repro, MismatchReportsExactValues) {
  Scenario s = keel_mckernan_scenario();
  for (auto& c : s.checks)
    if (c.id == "degree-A") c.params["expect"] = "2/3";
  const Report r = run_scenario(s);
  EXPECT_EQ(*r.first_failure(), "degree-A: degree: expected 2/3, got 1");
}

TEST(Explore, CharacteristicThreeMatchesRepro) {
  const Report e = explore_frobenius(3, 3);
  const Report r = run_repro();
  const Json& x = *e.exploration;
  EXPECT_EQ(x["degree_minus_k"], find(r, "degree-minus-K").values["degree"]);
  EXPECT_EQ(x["verdict"], "del_pezzo");
  EXPECT_EQ(x["census"], find(r, "singular-points").values["census"]);
  EXPECT_EQ(x["singular_points"], find(r, "singular-points").values["points"]);
  EXPECT_EQ(x["total_singular_points"], 7);
  EXPECT_EQ(x["discrepancies"], find(r, "discrepancies").values);
  EXPECT_EQ(x["class_group"], find(r, "class-group").values);
  EXPECT_EQ(x["target_rank"], find(r, "picard-rank").values["target_rank"]);
  EXPECT_EQ(e.digest, scenario_digest(construction_scenario(3, 3)));
}

TEST(Explore, CharacteristicFiveIsCanonicallyAmple) {
  const Json x = *explore_frobenius(5, 3).exploration;
  EXPECT_EQ(x["degree_minus_k"], "-1");
  EXPECT_EQ(x["verdict"], "canonically_ample");
  EXPECT_EQ(x["c_squared"], -5);
  EXPECT_EQ(x["discrepancies"]["values"]["C"], "-3/5");
  EXPECT_EQ(x["construction"], "extrapolated construction");
}

TEST(Explore, Errors) {
  try {
    explore_frobenius(3, 2);
    FAIL();
  } catch (const NotContractibleError& e) {
    EXPECT_NE(std::string(e.what()).find("C not contractible"), std::string::npos);
  }
  EXPECT_THROW(explore_frobenius(1, 3), DomainError);
  EXPECT_THROW(explore_frobenius(3, 0), DomainError);
}

TEST(Explore, KTrivialVerdictExists) {
  // Degree 2 - p a_C with a_C = (p - 2) / p from the same Mumford system.
  const Json x = *explore_frobenius(4, 3).exploration;
  EXPECT_EQ(x["degree_minus_k"], "0");
  EXPECT_EQ(x["verdict"], "K_trivial");
}

TEST(Emit, EmptyReportIsValidJson) {
  const Report empty;
  const Json doc = Json::parse(rendered(empty, ReportFormat::Json));
  EXPECT_EQ(doc["schema"], kReportSchema);
  EXPECT_TRUE(doc["checks"].empty());
  EXPECT_TRUE(doc["passed"].get<bool>());
}

TEST(Emit, TextHasOneLinePerCheck) {
  const std::string text = rendered(run_repro(), ReportFormat::Text);
  std::size_t pass_lines = 0;
  for (std::size_t pos = text.find("[PASS] "); pos != std::string::npos; pos = text.find("[PASS] ", pos + 1)) ++pass_lines;
  EXPECT_EQ(pass_lines, run_repro().checks.size());
  EXPECT_NE(text.find("15/15 checks passed"), std::string::npos);
}

TEST(Emit, UnwritablePath) {
  std::ostringstream sink;
  EXPECT_THROW(emit_report(run_repro(), ReportFormat::Json, "/nonexistent-dir/report.json", sink), Error);
}
