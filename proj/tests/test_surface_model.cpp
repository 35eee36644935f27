#include <gtest/gtest.h>

#include "kvv/cohomology.hpp"
#include "kvv/surface_model.hpp"
#include "support/properties.hpp"

using namespace kvv;

namespace {

Rational pair(const SurfaceModel& m, const std::string& a, const std::string& b) {
  return m.intersect(QDivisor::prime(a), QDivisor::prime(b));
}

}  // namespace

TEST(Quadric, Lattice) {
  const SurfaceModel q = SurfaceModel::new_quadric();
  EXPECT_EQ(q.rank(), 2u);
  EXPECT_EQ(q.basis_labels(), (std::vector<std::string>{"f_x", "f_y"}));
  EXPECT_EQ(q.intersect(IntVector{1, 0}, IntVector{1, 0}), 0);
  EXPECT_EQ(q.intersect(IntVector{1, 0}, IntVector{0, 1}), 1);
  EXPECT_EQ(q.intersect(q.canonical_class(), q.canonical_class()), 8);
  EXPECT_EQ(euler_characteristic(q, QDivisor()), 1);
  EXPECT_TRUE(q.prime_divisors().empty());
}

TEST(Plane, Lattice) {
  const SurfaceModel p = SurfaceModel::new_plane();
  EXPECT_EQ(p.rank(), 1u);
  EXPECT_EQ(p.intersect(p.canonical_class(), p.canonical_class()), 9);
}

TEST(DeclareCurve, Examples) {
  SurfaceModel q = SurfaceModel::new_quadric();
  q.declare_curve("C", {1, 3});
  q.declare_curve("F1", {1, 0});
  EXPECT_EQ(pair(q, "C", "C"), 6);
  EXPECT_EQ(pair(q, "C", "F1"), 3);
  EXPECT_EQ(pair(q, "F1", "F1"), 0);
  EXPECT_EQ(q.arithmetic_genus(q.at("C").class_vector), 0);
  EXPECT_THROW(q.declare_curve("D", {0, -1}), InvalidModelError);
  EXPECT_THROW(q.declare_curve("C", {1, 0}), InvalidModelError);
  EXPECT_THROW(q.declare_curve("W", {1}), InvalidModelError);
  EXPECT_THROW(q.at("missing"), InvalidModelError);
}

TEST(ArithmeticGenus, Examples) {
  SurfaceModel q = SurfaceModel::new_quadric();
  EXPECT_EQ(q.arithmetic_genus(IntVector{1, 3}), 0);
  EXPECT_EQ(q.arithmetic_genus(q.canonical_class()), 9);
  q.blow_up("E", {});
  EXPECT_EQ(q.arithmetic_genus(q.at("E").class_vector), 0);
}

TEST(BlowUp, GeneralPointLeavesClassesUnchanged) {
  SurfaceModel q = SurfaceModel::new_quadric();
  q.declare_curve("C", {1, 3});
  q.blow_up("E", {});
  EXPECT_EQ(q.rank(), 3u);
  EXPECT_EQ(q.at("C").class_vector, (IntVector{1, 3, 0}));
  EXPECT_EQ(pair(q, "E", "E"), -1);
  EXPECT_EQ(q.canonical_class(), (IntVector{-2, -2, 1}));
  EXPECT_EQ(q.basis_labels().back(), "e_E");
  EXPECT_TRUE(q.is_exceptional("E"));
  EXPECT_FALSE(q.is_exceptional("C"));
}

TEST(BlowUp, Errors) {
  SurfaceModel q = SurfaceModel::new_quadric();
  q.declare_curve("F1", {1, 0});
  q.declare_curve("F2", {1, 0});
  q.declare_curve("C", {1, 3});
  EXPECT_THROW(q.blow_up("E", {{"missing", 1}}), InvalidModelError);
  EXPECT_THROW(q.blow_up("E", {{"F1", 1}, {"F2", 1}}), InvalidModelError);  // disjoint fibres
  EXPECT_THROW(q.blow_up("E", {{"C", 0}}), InvalidModelError);
  EXPECT_THROW(q.blow_up("E", {{"C", 2}}), InvalidModelError);  // smooth rational curve
  EXPECT_THROW(q.blow_up("E", {{"C", 1}, {"C", 1}}), InvalidModelError);
  EXPECT_THROW(q.blow_up("F1", {}), InvalidModelError);
  EXPECT_EQ(q.rank(), 2u);
}

TEST(BlowUp, NineStepTable) {
  const SurfaceModel& s = kvv::testing::reference().model;
  EXPECT_EQ(s.rank(), 11u);
  EXPECT_EQ(pair(s, "C", "C"), -3);
  for (const std::string i : {"1", "2", "3"}) {
    EXPECT_EQ(pair(s, "H" + i, "H" + i), -2);
    EXPECT_EQ(pair(s, "G" + i, "G" + i), -2);
    EXPECT_EQ(pair(s, "F" + i, "F" + i), -3);
    EXPECT_EQ(pair(s, "E" + i, "E" + i), -1);
    EXPECT_EQ(pair(s, "C", "E" + i), 1);
    EXPECT_EQ(pair(s, "E" + i, "F" + i), 1);
    EXPECT_EQ(pair(s, "E" + i, "H" + i), 1);
    EXPECT_EQ(pair(s, "H" + i, "G" + i), 1);
    EXPECT_EQ(pair(s, "G" + i, "E" + i), 0);
    EXPECT_EQ(pair(s, "C", "G" + i), 0);
    EXPECT_EQ(pair(s, "C", "H" + i), 0);
    EXPECT_EQ(pair(s, "F" + i, "G" + i), 0);
    EXPECT_EQ(pair(s, "F" + i, "H" + i), 0);
    EXPECT_EQ(s.intersect(s.canonical_divisor(), QDivisor::prime("F" + i)), 1);
  }
  EXPECT_EQ(s.canonical_class(), (IntVector{-2, -2, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  for (const auto& p : s.prime_divisors()) EXPECT_EQ(s.arithmetic_genus(p.class_vector), 0) << p.name;
  EXPECT_EQ(s.signature(), (Inertia{1, 10, 0}));
}

TEST(QDivisor, Arithmetic) {
  const QDivisor a = QDivisor::prime("E1") + make_rational(1, 3) * QDivisor::prime("F1");
  const QDivisor b = a - QDivisor::prime("E1");
  EXPECT_EQ(b, make_rational(1, 3) * QDivisor::prime("F1"));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_FALSE(a.has_integral_coefficients());
  EXPECT_EQ(QDivisor::from_class({1, 0}), QDivisor::from_class({1, 0, 0, 0}));
  EXPECT_THROW(make_rational(1, 2) * QDivisor::from_class({1, 0}), DomainError);
  EXPECT_EQ(make_rational(2) * QDivisor::from_class({1, 0}), QDivisor::from_class({2, 0}));
}

TEST(FloorDivisor, Examples) {
  const QDivisor fractional = make_rational(2, 3) * QDivisor::prime("H1") + make_rational(1, 3) * QDivisor::prime("G1");
  EXPECT_TRUE(floor_divisor(fractional).is_zero());
  const QDivisor integral = QDivisor::prime("E1") - QDivisor::prime("C");
  EXPECT_EQ(floor_divisor(integral), integral);
  const QDivisor negative = make_rational(-1, 3) * QDivisor::prime("C");
  EXPECT_EQ(floor_divisor(negative), -QDivisor::prime("C"));
}

TEST(FormatDivisor, FollowsOrder) {
  const QDivisor d = QDivisor::prime("E1") + make_rational(-2, 3) * QDivisor::prime("H2") +
                     make_rational(1, 3) * QDivisor::prime("F1");
  EXPECT_EQ(format_divisor(d, {"E1", "F1", "H2"}), "E1 + 1/3 F1 - 2/3 H2");
}

TEST(SurfaceModel, IntegralClassRejectsFractions) {
  const SurfaceModel& s = kvv::testing::reference().model;
  EXPECT_THROW(s.integral_class(make_rational(1, 3) * QDivisor::prime("C")), DomainError);
  EXPECT_EQ(s.base_class(s.at("C").class_vector), (IntVector{1, 3}));
  EXPECT_EQ(s.pullback_from_base({1, 0}), (IntVector{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(SurfaceModelProperties, RandomBlowUpSequences) {
  const auto r = kvv::testing::blowup_sequences(21, 150);
  EXPECT_TRUE(r.ok) << r.counterexample;
  EXPECT_GT(r.cases, 100);
}
