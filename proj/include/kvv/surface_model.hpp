#pragma once

// Picard lattice of a rational surface obtained from P1 x P1 (or P2) by a
// sequence of point blow-ups, with a registry of named prime divisors.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kvv/exactlin.hpp"

namespace kvv {

enum class BaseSurface { Quadric, Plane };

std::string to_string(BaseSurface base);

enum class CurveOrigin { Declared, Exceptional };

struct PrimeDivisor {
  std::string name;
  IntVector class_vector;
  bool is_curve = true;
  CurveOrigin origin = CurveOrigin::Declared;
};

/// Formal Q-combination of named prime divisors plus an integral lattice
/// class. A residual shorter than the current lattice rank is zero-padded,
/// i.e. read as the total transform of a class from an earlier stage.
class QDivisor {
 public:
  QDivisor() = default;

  static QDivisor prime(const std::string& name, const Rational& coefficient = 1);
  static QDivisor from_class(IntVector residual);

  /// Zero coefficients are never stored.
  const std::map<std::string, Rational>& named() const { return named_; }
  const IntVector& residual() const { return residual_; }

  Rational coefficient(const std::string& name) const;
  void set(const std::string& name, const Rational& coefficient);
  void add(const std::string& name, const Rational& coefficient);
  void set_residual(IntVector residual) { residual_ = std::move(residual); }

  bool is_zero() const;
  bool has_integral_coefficients() const;

  QDivisor& operator+=(const QDivisor& other);
  QDivisor& operator-=(const QDivisor& other);
  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator-(const QDivisor& a);
  /// Scaling by a non-integer rational is only defined on a zero residual.
  friend QDivisor operator*(const Rational& s, const QDivisor& d);

  friend bool operator==(const QDivisor& a, const QDivisor& b);

 private:
  std::map<std::string, Rational> named_;
  IntVector residual_;
};

/// Coefficient-wise floor of the named part; the residual is untouched.
QDivisor floor_divisor(const QDivisor& d);

/// Writes e.g. "E1 + 1/3 F1 - 2/3 H2"; terms follow `order` when given.
std::string format_divisor(const QDivisor& d, const std::vector<std::string>& order = {});

class SurfaceModel {
 public:
  static SurfaceModel new_quadric();
  static SurfaceModel new_plane();

  BaseSurface base() const { return base_; }
  /// Rank of the base lattice (2 for the quadric, 1 for the plane).
  std::size_t base_rank() const;
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis_labels() const { return basis_; }
  const IntMatrix& gram() const { return gram_; }
  const IntVector& canonical_class() const { return canonical_; }

  /// Registered prime divisors in insertion order.
  const std::vector<PrimeDivisor>& prime_divisors() const { return divisors_; }
  std::vector<std::string> names() const;
  const PrimeDivisor* find(const std::string& name) const;
  const PrimeDivisor& at(const std::string& name) const;
  bool is_exceptional(const std::string& name) const;

  /// Registers an irreducible curve of the given class. The class must have
  /// nonnegative arithmetic genus and the shape of a strict transform
  /// (effective nonzero base class, nonpositive exceptional coefficients).
  void declare_curve(const std::string& name, IntVector class_vector);

  struct Incidence {
    std::string curve;
    int multiplicity = 1;
    friend bool operator==(const Incidence&, const Incidence&) = default;
  };

  /// Blows up a point lying on the listed curves with the given
  /// multiplicities. An empty list means a general point.
  void blow_up(const std::string& exceptional_name, const std::vector<Incidence>& incident);

  /// Zero-padded copy of `v` at the current rank.
  IntVector pad(const IntVector& v) const;
  /// Total class Σ coeff·class + residual.
  RationalVector total_class(const QDivisor& d) const;
  /// Integral total class; throws DomainError if some coefficient survives
  /// as a fraction.
  IntVector integral_class(const QDivisor& d) const;

  Rational intersect(const RationalVector& a, const RationalVector& b) const;
  Rational intersect(const QDivisor& a, const QDivisor& b) const;
  Integer intersect(const IntVector& a, const IntVector& b) const;

  /// D.(D + K)/2 + 1.
  Rational arithmetic_genus(const RationalVector& d) const;
  Rational arithmetic_genus(const IntVector& d) const;

  /// Push a class down to the base surface (drop exceptional coordinates).
  IntVector base_class(const IntVector& v) const;
  /// Total transform of a base class.
  IntVector pullback_from_base(const IntVector& base) const;

  QDivisor canonical_divisor() const { return QDivisor::from_class(canonical_); }

  /// (positive, negative, zero) counts of the intersection form.
  Inertia signature() const;

 private:
  explicit SurfaceModel(BaseSurface base);

  void validate_new_name(const std::string& name) const;

  BaseSurface base_;
  std::vector<std::string> basis_;
  IntMatrix gram_;
  IntVector canonical_;
  std::vector<PrimeDivisor> divisors_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace kvv
