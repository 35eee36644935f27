#include <gtest/gtest.h>

#include "kvv/cohomology.hpp"
#include "kvv/cone.hpp"
#include "support/properties.hpp"

using namespace kvv;
using kvv::testing::reference;

namespace {

QDivisor q(const std::string& name, long num = 1) { return make_rational(num) * QDivisor::prime(name); }

QDivisor divisor_a() { return q("E2") + q("E3") - q("E1"); }

}  // namespace

TEST(BuildCone, DivisorA) {
  const ConeModel cone = build_cone(reference().contraction, divisor_a());
  EXPECT_EQ(cone.r, -1);
  EXPECT_EQ(cone.section_discrepancy, 0);
  EXPECT_TRUE(cone.verdicts.q_gorenstein);
  EXPECT_TRUE(cone.verdicts.crepant_partial_resolution);
  EXPECT_FALSE(cone.verdicts.cm.has_value());
  ASSERT_TRUE(cone.cone_class_group.has_value());
  // Frozen from an independent SNF of the contracted rows plus the row of A.
  EXPECT_EQ(*cone.cone_class_group, (ClassGroupReport{0, {3, 3, 3}}));
  EXPECT_EQ(cone.verdicts.q_factorial, std::optional<bool>(true));
}

TEST(BuildCone, AnticanonicalRepresentative) {
  EXPECT_EQ(build_cone(reference().contraction, q("E1")).r, -1);
}

TEST(BuildCone, DoubledPolarization) {
  const ConeModel cone = build_cone(reference().contraction, make_rational(2) * divisor_a());
  EXPECT_EQ(cone.r, make_rational(-1, 2));
  EXPECT_EQ(cone.section_discrepancy, make_rational(-1, 2));
  EXPECT_FALSE(cone.verdicts.crepant_partial_resolution);
}

TEST(BuildCone, ClassGroupRankDropsByOne) {
  const auto base = reference().contraction.class_group();
  const auto cone = *build_cone(reference().contraction, divisor_a()).cone_class_group;
  EXPECT_EQ(cone.rank + 1, base.rank);
}

TEST(BuildCone, Errors) {
  EXPECT_THROW(build_cone(reference().contraction, QDivisor()), DomainError);
  const Contraction partial = Contraction::contract(reference().model, {"C"});
  EXPECT_THROW(build_cone(partial, divisor_a()), RankError);
}

TEST(BuildCone, FractionalPolarizationLeavesClassGroupOpen) {
  const ConeModel cone = build_cone(reference().contraction, make_rational(1, 2) * divisor_a());
  EXPECT_EQ(cone.r, -2);
  EXPECT_FALSE(cone.cone_class_group.has_value());
  EXPECT_FALSE(cone.verdicts.q_factorial.has_value());
}

TEST(DecisionTable, Examples) {
  EXPECT_EQ(cone_klt_decision(PairClass::Terminal, true, false, -2).verdict, ConeVerdict::Terminal);
  const ConeDecision klt_r0 = cone_klt_decision(PairClass::Klt, true, false, 0);
  EXPECT_EQ(klt_r0.verdict, ConeVerdict::NotKlt);
  EXPECT_EQ(klt_r0.row, 1);
  const ConeDecision row3 = cone_klt_decision(PairClass::Klt, false, true, -1);
  EXPECT_EQ(row3.verdict, ConeVerdict::Klt);
  EXPECT_EQ(row3.row, 3);
  EXPECT_NE(row3.caveat.find("characteristic 0"), std::string::npos);
}

TEST(DecisionTable, OtherRows) {
  EXPECT_EQ(cone_klt_decision(PairClass::Klt, true, false, -1).verdict, ConeVerdict::Klt);
  EXPECT_EQ(cone_klt_decision(PairClass::Terminal, true, false, -1).verdict, ConeVerdict::NotTerminal);
  EXPECT_EQ(cone_klt_decision(PairClass::Dlt, true, false, -1).verdict, ConeVerdict::Dlt);
  EXPECT_EQ(cone_klt_decision(PairClass::Dlt, true, false, 1).verdict, ConeVerdict::Undetermined);
  EXPECT_EQ(cone_klt_decision(PairClass::Klt, false, false, -1).verdict, ConeVerdict::Undetermined);
  EXPECT_EQ(to_string(ConeVerdict::NotTerminal), "klt_not_terminal");
}

TEST(LocalCohomology, Certificate) {
  const ConeModel cone = build_cone(reference().contraction, divisor_a());
  const bool h1 = verify_kvv_failure(reference().contraction, divisor_a()).h1_nonzero;
  const ConeModel certified = local_cohomology_certificate(cone, -1, h1);
  EXPECT_EQ(certified.verdicts.cm, std::optional<bool>(false));
  EXPECT_EQ(certified.verdicts.cm_certificate_summand, std::optional<int>(-1));
  EXPECT_EQ(summarize(certified), "Q-factorial, klt (supplied externally), not CM");
  EXPECT_NE(certified.klt_provenance.find("supplied externally"), std::string::npos);

  const ConeModel uncertified = local_cohomology_certificate(cone, -1, false);
  EXPECT_FALSE(uncertified.verdicts.cm.has_value());
  EXPECT_EQ(summarize(uncertified), "Q-factorial, klt (supplied externally), CM undetermined");
}

TEST(ConeProperties, Scaling) {
  const auto r = kvv::testing::cone_scaling(51, 40);
  EXPECT_TRUE(r.ok) << r.counterexample;
}

TEST(ConeProperties, DecisionTableTotal) {
  const auto r = kvv::testing::decision_table_total();
  EXPECT_TRUE(r.ok) << r.counterexample;
  EXPECT_EQ(r.cases, 96);
}
