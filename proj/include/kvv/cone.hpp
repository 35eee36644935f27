#pragma once

// Demazure cone C_a(T, O_T(A)) over a rank-one polarized surface, studied
// through its partial resolution Y -> C_a with exceptional section E ~ T.

#include <optional>
#include <string>

#include "kvv/contraction.hpp"

namespace kvv {

struct ConeVerdicts {
  /// K of the cone is Q-Cartier: some r with K_T ~_Q r A exists.
  bool q_gorenstein = false;
  /// Cone class group is finite, so every Weil divisor is Q-Cartier.
  std::optional<bool> q_factorial;
  /// Section discrepancy vanishes, i.e. K_Y ~_Q f^* K_X.
  bool crepant_partial_resolution = false;
  /// Only set once a cohomology certificate has been supplied.
  std::optional<bool> cm;
  std::optional<int> cm_certificate_summand;
};

struct ConeModel {
  Contraction base_contraction;
  QDivisor polarization;
  Rational r;                   // K_T == r A
  Rational section_discrepancy;  // -(1 + r)
  /// Cl(T)/<A>; nullopt when A has a non-integral class.
  std::optional<ClassGroupReport> cone_class_group;
  ConeVerdicts verdicts;
  std::string klt_provenance;
};

/// Throws DomainError when A is numerically trivial and RankError when the
/// target does not have Picard rank one.
ConeModel build_cone(const Contraction& contraction, const QDivisor& a);

enum class PairClass { Terminal, Klt, Dlt };
enum class ConeVerdict { Terminal, Klt, Dlt, NotTerminal, NotKlt, Undetermined };

std::string to_string(ConeVerdict v);

struct ConeDecision {
  ConeVerdict verdict = ConeVerdict::Undetermined;
  int row = 0;  // 1..3, 0 when no row applies
  std::string caveat;
};

/// Decision table for singularities of the cone from the pair (X, Delta):
///   row 1  L Cartier: cone terminal (klt) iff pair terminal (klt) and r < -1 (r < 0)
///   row 2  L Cartier: cone dlt if pair dlt and r < 0
///   row 3  X Q-factorial, characteristic 0: cone klt iff pair klt and r < 0
/// Row 3 carries a caveat: it is not valid in positive characteristic.
ConeDecision cone_klt_decision(PairClass pair_class, bool l_cartier, bool base_q_factorial,
                               const Rational& r);

/// H^2_v(cone) contains H^1(T, O(mA)); a certified nonzero summand proves the
/// vertex is not Cohen-Macaulay. Without a certificate nothing changes.
ConeModel local_cohomology_certificate(ConeModel cone, int m, bool h1_nonzero);

/// One-line verdict such as "Q-factorial, klt (supplied externally), not CM".
std::string summarize(const ConeModel& cone);

}  // namespace kvv
