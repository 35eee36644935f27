#pragma once

// Birational contraction of a negative-definite configuration of curves:
// Mumford pullback, pushforward, discrepancies, cyclic quotient
// classification, class group and rank-one positivity tests.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kvv/exactlin.hpp"
#include "kvv/surface_model.hpp"

namespace kvv {

enum class SingularityClass { Terminal, Canonical, Klt, Lc, NotLc };

std::string to_string(SingularityClass c);

/// terminal a > 0, canonical a >= 0, klt a > -1, lc a >= -1.
SingularityClass classify_discrepancy(const Rational& minimum);

struct DiscrepancyReport {
  /// Contracted curve -> a(curve), in contraction order.
  std::vector<std::pair<std::string, Rational>> values;
  /// Minimum discrepancy; nullopt when nothing is contracted.
  std::optional<Rational> minimum;
  SingularityClass classification = SingularityClass::Terminal;

  Rational at(const std::string& name) const;
};

enum class ChainLabel { AnChain, WeightedCyclic };

std::string to_string(ChainLabel label);

struct SingularPointReport {
  std::vector<std::string> component;     // chain order
  std::vector<Integer> self_intersections;  // b_i = -C_i^2 >= 2
  Integer n;                               // type 1/n(1, q)
  Integer q;
  ChainLabel label = ChainLabel::WeightedCyclic;

  std::string type() const;  // "1/n(1,q)"
};

/// n/q = b1 - 1/(b2 - 1/(...)). Requires every b_i >= 2.
std::pair<Integer, Integer> hirzebruch_jung(const std::vector<Integer>& chain);

struct ClassGroupReport {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  friend bool operator==(const ClassGroupReport&, const ClassGroupReport&) = default;
  std::string to_string() const;
};

/// Z^cols / (row span of `relations`), read off the Smith normal form.
ClassGroupReport quotient_group(const IntMatrix& relations);

struct NefReport {
  bool nef = true;
  std::vector<std::pair<std::string, Rational>> degrees;  // contraction order

  Rational at(const std::string& name) const;
};

class Contraction {
 public:
  /// Throws NotContractibleError if the Gram matrix is not negative definite.
  static Contraction contract(const SurfaceModel& model, const std::vector<std::string>& curves);

  const SurfaceModel& source() const { return source_; }
  const std::vector<std::string>& contracted() const { return contracted_; }
  const RationalMatrix& gram() const { return gram_; }
  const RationalMatrix& gram_inverse() const { return gram_inverse_; }
  bool is_contracted(const std::string& name) const;

  std::size_t target_rank() const { return source_.rank() - contracted_.size(); }

  /// Mumford pullback of a divisor on the target, given by a representative
  /// with zero coefficients on the contracted curves.
  QDivisor pullback(const QDivisor& d_on_target) const;
  QDivisor pushforward(const QDivisor& d) const;

  /// K_T, represented by K_S with the contracted part dropped.
  QDivisor canonical_divisor() const { return source_.canonical_divisor(); }

  DiscrepancyReport discrepancies() const;
  std::vector<SingularPointReport> classify_singularities() const;
  ClassGroupReport class_group() const;
  NefReport relative_nef(const QDivisor& d) const;

  /// Pullback of a general pi_x-fiber (a line on the plane).
  QDivisor default_witness() const;

  /// deg = pullback(D) . witness. Requires target rank one.
  Rational degree_against(const QDivisor& d_on_target,
                          const std::optional<QDivisor>& witness = std::nullopt) const;
  bool is_ample_rank1(const QDivisor& d_on_target,
                      const std::optional<QDivisor>& witness = std::nullopt) const;
  /// r with D1 == r D2 numerically; nullopt when D2 is numerically trivial.
  std::optional<Rational> numerically_proportional(
      const QDivisor& d1, const QDivisor& d2,
      const std::optional<QDivisor>& witness = std::nullopt) const;

  /// Rows are the contracted class vectors.
  IntMatrix contracted_classes() const;

 private:
  Contraction() = default;

  void require_rank_one(const char* what) const;

  SurfaceModel source_ = SurfaceModel::new_quadric();
  std::vector<std::string> contracted_;
  RationalMatrix gram_;
  RationalMatrix gram_inverse_;
};

}  // namespace kvv
