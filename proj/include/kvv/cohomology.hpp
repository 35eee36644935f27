#pragma once

// Riemann-Roch bookkeeping on blown-up rational surfaces and the numerical
// pipelines that certify (non-)vanishing of H^1.

#include <optional>
#include <string>

#include "kvv/contraction.hpp"
#include "kvv/surface_model.hpp"

namespace kvv {

/// chi(O_S(D)) = 1 + D.(D - K)/2. The total class of D must be integral.
Rational euler_characteristic(const SurfaceModel& model, const QDivisor& d);

/// h^0(P1 x P1, O(a, b)).
Integer h0_on_quadric(const Integer& a, const Integer& b);

struct AnticanonicalSectionReport {
  bool identity_holds = false;
  /// floor(-pullback(K_T)) on S, i.e. -K_S - sum of contracted curves with
  /// positive coefficient rounded up.
  QDivisor left_side;
  IntVector left_class;
  IntVector right_class;
  IntVector base_class;  // pushforward of the left side to the quadric
  std::optional<Integer> h0;
  std::string detail;
};

/// Checks floor(-psi^* K_T) = f^*(base) + exceptional_part as lattice classes,
/// with exceptional_part effective and supported on blow-up exceptional
/// curves, and then reads h^0(T, -K_T) off the quadric.
AnticanonicalSectionReport verify_h0_anticanonical_zero(const Contraction& contraction,
                                                        const QDivisor& exceptional_part);

struct KvvFailureReport {
  QDivisor pullback_expansion;  // -psi^* A
  QDivisor floor;               // floor(-psi^* A)
  NefReport relative_nef;
  Rational k_dot_floor;
  Rational floor_squared;
  Rational euler_characteristic;
  bool h1_nonzero = false;
  bool not_globally_f_split = false;
  bool no_w2_liftable_log_resolution = false;
  std::string leray_note;
};

/// -psi^*A -> floor -> relative nefness -> Riemann-Roch on S. H^1(T, O(-A))
/// is certified nonzero when chi <= -1. Throws LerayHypothesisError when the
/// floor is not relatively nef.
KvvFailureReport verify_kvv_failure(const Contraction& contraction, const QDivisor& a);

/// 2 dim (L.D) / ((p-1) L.D - K.D). Throws DomainError when the denominator
/// is not positive.
Rational kollar_bound(int dim, int p, const Rational& l_dot_d, const Rational& k_dot_d);

enum class CaseVerdict { Contradiction, NoContradiction };

std::string to_string(CaseVerdict v);

/// The curve degree satisfies lower < L.C_x < threshold (both strict), so the
/// case is contradictory exactly when lower >= threshold.
CaseVerdict vanishing_case_analysis(int p, const Rational& lower_bound, const Rational& threshold);

/// Limit 4/(p-1) of the surface bend-and-break bound.
Rational limiting_threshold(int p);

/// Verdict for H^1(X, O(mA)) with A big, nef and Cartier on a klt del Pezzo
/// surface: L = mA - K has L.C_x > m for a general rational curve.
CaseVerdict multiple_vanishing_verdict(int p, int multiple);

}  // namespace kvv
