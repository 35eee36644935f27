#include "kvv/cohomology.hpp"

#include <algorithm>

namespace kvv {

Rational euler_characteristic(const SurfaceModel& model, const QDivisor& d) {
  const IntVector cls = model.integral_class(d);
  const Integer d_squared = model.intersect(cls, cls);
  const Integer k_dot_d = model.intersect(model.canonical_class(), cls);
  // chi(O_S) = 1 on a rational surface.
  return Rational(d_squared - k_dot_d) / 2 + 1;
}

Integer h0_on_quadric(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) return 0;
  return (a + 1) * (b + 1);
}

AnticanonicalSectionReport verify_h0_anticanonical_zero(const Contraction& contraction,
                                                        const QDivisor& exceptional_part) {
  const SurfaceModel& model = contraction.source();
  AnticanonicalSectionReport report;
  // H^0(T, -K_T) = H^0(S, floor(-psi^* K_T)).
  report.left_side = floor_divisor(-contraction.pullback(contraction.canonical_divisor()));
  report.left_class = model.integral_class(report.left_side);

  IntVector base = model.base_class(report.left_side.residual());
  for (const auto& [name, coeff] : report.left_side.named()) {
    const IntVector curve_base = model.base_class(model.at(name).class_vector);
    for (std::size_t i = 0; i < base.size(); ++i) base[i] += coeff.get_num() * curve_base[i];
  }
  report.base_class = base;

  if (exceptional_part.residual().size() > model.rank()) {
    report.detail = "exceptional part has class length " +
                    std::to_string(exceptional_part.residual().size()) + " but the lattice rank is " +
                    std::to_string(model.rank());
    return report;
  }
  for (const auto& [name, coeff] : exceptional_part.named()) {
    const PrimeDivisor* d = model.find(name);
    if (!d) {
      report.detail = "exceptional part refers to unknown curve '" + name + "'";
      return report;
    }
    if (d->origin != CurveOrigin::Exceptional) {
      report.detail = "'" + name + "' is not contracted by the blow-down to the base";
      return report;
    }
    if (!is_integral(coeff) || coeff < 0) {
      report.detail = "exceptional part must be an effective integral divisor (coefficient " +
                      to_string(coeff) + " on '" + name + "')";
      return report;
    }
  }
  const auto residual = exceptional_part.residual();
  if (std::any_of(residual.begin(), residual.end(), [](const Integer& x) { return x != 0; })) {
    report.detail = "exceptional part must be given by named exceptional curves only";
    return report;
  }

  report.right_class = model.pullback_from_base(base);
  const IntVector exceptional_class = model.integral_class(exceptional_part);
  for (std::size_t i = 0; i < model.rank(); ++i) report.right_class[i] += exceptional_class[i];

  report.identity_holds = report.left_class == report.right_class;
  if (!report.identity_holds) {
    std::string lhs;
    std::string rhs;
    for (std::size_t i = 0; i < model.rank(); ++i) {
      lhs += (i ? ", " : "") + to_string(report.left_class[i]);
      rhs += (i ? ", " : "") + to_string(report.right_class[i]);
    }
    report.detail = "class identity fails: [" + lhs + "] != [" + rhs + "]";
    return report;
  }
  if (model.base() == BaseSurface::Quadric) {
    report.h0 = h0_on_quadric(base[0], base[1]);
  } else {
    report.detail = "h0 is only evaluated on a quadric base";
  }
  return report;
}

KvvFailureReport verify_kvv_failure(const Contraction& contraction, const QDivisor& a) {
  if (contraction.target_rank() != 1) {
    throw RankError("verify_kvv_failure requires a target of Picard rank 1, got rank " +
                    std::to_string(contraction.target_rank()));
  }
  const SurfaceModel& model = contraction.source();
  KvvFailureReport report;
  report.pullback_expansion = -contraction.pullback(a);
  report.floor = floor_divisor(report.pullback_expansion);
  report.relative_nef = contraction.relative_nef(report.floor);
  if (!report.relative_nef.nef) {
    std::string negative;
    for (const auto& [name, degree] : report.relative_nef.degrees) {
      if (degree < 0) negative += (negative.empty() ? "" : ", ") + name + ": " + to_string(degree);
    }
    throw LerayHypothesisError("Leray degeneration hypothesis fails: round-down is not relatively nef (" +
                               negative + ")");
  }
  report.leray_note =
      "round-down is relatively nef: hypothesis of relative Kawamata-Viehweg vanishing for "
      "birational surface morphisms verified numerically, so H^i(T, O(-A)) = H^i(S, O(round-down))";

  const IntVector floor_class = model.integral_class(report.floor);
  report.k_dot_floor = Rational(model.intersect(model.canonical_class(), floor_class));
  report.floor_squared = Rational(model.intersect(floor_class, floor_class));
  report.euler_characteristic = euler_characteristic(model, report.floor);
  // chi = h0 - h1 + h2 with h0, h2 >= 0.
  report.h1_nonzero = report.euler_characteristic <= -1;
  report.not_globally_f_split = report.h1_nonzero;
  report.no_w2_liftable_log_resolution = report.h1_nonzero;
  return report;
}

Rational kollar_bound(int dim, int p, const Rational& l_dot_d, const Rational& k_dot_d) {
  if (dim < 1) throw DomainError("kollar_bound: dimension must be positive");
  if (p < 2) throw DomainError("kollar_bound: characteristic must be at least 2");
  const Rational denominator = Rational(p - 1) * l_dot_d - k_dot_d;
  if (denominator <= 0) {
    throw DomainError("kollar_bound: ((p-1)L - K).D = " + to_string(denominator) + " is not positive");
  }
  return Rational(2 * dim) * l_dot_d / denominator;
}

std::string to_string(CaseVerdict v) {
  return v == CaseVerdict::Contradiction ? "contradiction" : "no_contradiction";
}

CaseVerdict vanishing_case_analysis(int /*p*/, const Rational& lower_bound, const Rational& threshold) {
  return lower_bound >= threshold ? CaseVerdict::Contradiction : CaseVerdict::NoContradiction;
}

Rational limiting_threshold(int p) {
  if (p < 2) throw DomainError("limiting_threshold: characteristic must be at least 2");
  return Rational(4) / (p - 1);
}

CaseVerdict multiple_vanishing_verdict(int p, int multiple) {
  if (multiple < 1) throw DomainError("multiple_vanishing_verdict: multiple must be positive");
  return vanishing_case_analysis(p, Rational(multiple), limiting_threshold(p));
}

}  // namespace kvv
