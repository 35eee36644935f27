#include "kvv/cone.hpp"

#include <algorithm>

namespace kvv {

ConeModel build_cone(const Contraction& contraction, const QDivisor& a) {
  const auto r = contraction.numerically_proportional(contraction.canonical_divisor(), a);
  if (!r) throw DomainError("build_cone: polarization is numerically trivial");

  ConeModel cone{contraction, a, *r, -(1 + *r), std::nullopt, {}, {}};
  cone.verdicts.q_gorenstein = true;
  cone.verdicts.crepant_partial_resolution = cone.section_discrepancy == 0;
  cone.klt_provenance =
      "not derived here: the characteristic-0 criterion does not apply; kltness rests on the "
      "toroidal structure of the partial resolution (supplied externally)";

  const SurfaceModel& model = contraction.source();
  const RationalVector total = model.total_class(a);
  const bool integral = std::all_of(total.begin(), total.end(), [](const Rational& x) { return is_integral(x); });
  if (integral) {
    const IntMatrix classes = contraction.contracted_classes();
    IntMatrix relations(classes.rows() + 1, model.rank());
    for (std::size_t i = 0; i < classes.rows(); ++i)
      for (std::size_t j = 0; j < model.rank(); ++j) relations(i, j) = classes(i, j);
    for (std::size_t j = 0; j < model.rank(); ++j) relations(classes.rows(), j) = total[j].get_num();
    cone.cone_class_group = quotient_group(relations);
    cone.verdicts.q_factorial = cone.cone_class_group->rank == 0;
  }
  return cone;
}

std::string to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::Terminal:
      return "terminal";
    case ConeVerdict::Klt:
      return "klt";
    case ConeVerdict::Dlt:
      return "dlt";
    case ConeVerdict::NotTerminal:
      return "klt_not_terminal";
    case ConeVerdict::NotKlt:
      return "not_klt";
    case ConeVerdict::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

ConeDecision cone_klt_decision(PairClass pair_class, bool l_cartier, bool base_q_factorial,
                               const Rational& r) {
  const bool pair_klt = pair_class == PairClass::Terminal || pair_class == PairClass::Klt;
  if (l_cartier) {
    if (pair_class == PairClass::Terminal && r < -1) return {ConeVerdict::Terminal, 1, {}};
    if (pair_klt && r < 0) {
      // Terminal needs both a terminal pair and r < -1; with a terminal pair
      // the equivalence rules it out, otherwise the table is silent.
      return {pair_class == PairClass::Terminal ? ConeVerdict::NotTerminal : ConeVerdict::Klt, 1, {}};
    }
    if (pair_klt) return {ConeVerdict::NotKlt, 1, {}};
    if (pair_class == PairClass::Dlt && r < 0) return {ConeVerdict::Dlt, 2, {}};
    return {ConeVerdict::Undetermined, 0, {}};
  }
  if (base_q_factorial && pair_klt) {
    return {r < 0 ? ConeVerdict::Klt : ConeVerdict::NotKlt, 3,
            "row 3 assumes characteristic 0; in positive characteristic kltness must be "
            "established separately"};
  }
  return {ConeVerdict::Undetermined, 0, {}};
}

ConeModel local_cohomology_certificate(ConeModel cone, int m, bool h1_nonzero) {
  if (h1_nonzero) {
    cone.verdicts.cm = false;
    cone.verdicts.cm_certificate_summand = m;
  }
  return cone;
}

std::string summarize(const ConeModel& cone) {
  std::string out;
  if (!cone.verdicts.q_factorial.has_value()) {
    out = "Q-factoriality undetermined";
  } else {
    out = *cone.verdicts.q_factorial ? "Q-factorial" : "not Q-factorial";
  }
  out += ", klt (supplied externally)";
  if (cone.verdicts.cm.has_value()) {
    out += *cone.verdicts.cm ? ", CM" : ", not CM";
  } else {
    out += ", CM undetermined";
  }
  return out;
}

}  // namespace kvv
