#include "kvv/surface_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kvv {

std::string to_string(BaseSurface base) {
  switch (base) {
    case BaseSurface::Quadric:
      return "quadric";
    case BaseSurface::Plane:
      return "plane";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// QDivisor

QDivisor QDivisor::prime(const std::string& name, const Rational& coefficient) {
  QDivisor d;
  d.set(name, coefficient);
  return d;
}

QDivisor QDivisor::from_class(IntVector residual) {
  QDivisor d;
  d.residual_ = std::move(residual);
  return d;
}

Rational QDivisor::coefficient(const std::string& name) const {
  const auto it = named_.find(name);
  return it == named_.end() ? Rational(0) : it->second;
}

void QDivisor::set(const std::string& name, const Rational& coefficient) {
  if (coefficient == 0) {
    named_.erase(name);
  } else {
    named_[name] = coefficient;
  }
}

void QDivisor::add(const std::string& name, const Rational& coefficient) {
  set(name, this->coefficient(name) + coefficient);
}

bool QDivisor::is_zero() const {
  return named_.empty() &&
         std::all_of(residual_.begin(), residual_.end(), [](const Integer& x) { return x == 0; });
}

bool QDivisor::has_integral_coefficients() const {
  return std::all_of(named_.begin(), named_.end(),
                     [](const auto& kv) { return is_integral(kv.second); });
}

namespace {

void add_padded(IntVector& target, const IntVector& source, int sign) {
  if (target.size() < source.size()) target.resize(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (sign > 0) {
      target[i] += source[i];
    } else {
      target[i] -= source[i];
    }
  }
}

bool padded_equal(const IntVector& a, const IntVector& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Integer x = i < a.size() ? a[i] : Integer(0);
    const Integer y = i < b.size() ? b[i] : Integer(0);
    if (x != y) return false;
  }
  return true;
}

}  // namespace

QDivisor& QDivisor::operator+=(const QDivisor& other) {
  for (const auto& [name, c] : other.named_) add(name, c);
  add_padded(residual_, other.residual_, +1);
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& other) {
  for (const auto& [name, c] : other.named_) add(name, -c);
  add_padded(residual_, other.residual_, -1);
  return *this;
}

QDivisor operator-(const QDivisor& a) {
  QDivisor n;
  n -= a;
  return n;
}

QDivisor operator*(const Rational& s, const QDivisor& d) {
  QDivisor out;
  for (const auto& [name, c] : d.named_) out.set(name, s * c);
  const bool residual_zero = std::all_of(d.residual_.begin(), d.residual_.end(),
                                         [](const Integer& x) { return x == 0; });
  if (!residual_zero) {
    if (!is_integral(s)) {
      throw DomainError("cannot scale an integral residual class by a non-integer");
    }
    out.residual_ = d.residual_;
    for (auto& x : out.residual_) x *= s.get_num();
  }
  return out;
}

bool operator==(const QDivisor& a, const QDivisor& b) {
  return a.named_ == b.named_ && padded_equal(a.residual_, b.residual_);
}

QDivisor floor_divisor(const QDivisor& d) {
  QDivisor out = QDivisor::from_class(d.residual());
  for (const auto& [name, c] : d.named()) out.set(name, Rational(floor(c)));
  return out;
}

std::string format_divisor(const QDivisor& d, const std::vector<std::string>& order) {
  std::vector<std::string> names;
  for (const auto& name : order)
    if (d.coefficient(name) != 0) names.push_back(name);
  for (const auto& [name, c] : d.named())
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);

  std::ostringstream out;
  bool first = true;
  for (const auto& name : names) {
    Rational c = d.coefficient(name);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c != 1) out << to_string(c) << " ";
    out << name;
    first = false;
  }
  const bool residual_zero = std::all_of(d.residual().begin(), d.residual().end(),
                                         [](const Integer& x) { return x == 0; });
  if (!residual_zero) {
    out << (first ? "" : " + ") << "[";
    for (std::size_t i = 0; i < d.residual().size(); ++i) {
      out << (i ? ", " : "") << to_string(d.residual()[i]);
    }
    out << "]";
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// SurfaceModel

SurfaceModel::SurfaceModel(BaseSurface base) : base_(base) {}

SurfaceModel SurfaceModel::new_quadric() {
  SurfaceModel m(BaseSurface::Quadric);
  m.basis_ = {"f_x", "f_y"};
  m.gram_ = IntMatrix{{0, 1}, {1, 0}};
  m.canonical_ = {-2, -2};
  return m;
}

SurfaceModel SurfaceModel::new_plane() {
  SurfaceModel m(BaseSurface::Plane);
  m.basis_ = {"h"};
  m.gram_ = IntMatrix{{1}};
  m.canonical_ = {-3};
  return m;
}

std::size_t SurfaceModel::base_rank() const { return base_ == BaseSurface::Quadric ? 2 : 1; }

std::vector<std::string> SurfaceModel::names() const {
  std::vector<std::string> out;
  out.reserve(divisors_.size());
  for (const auto& d : divisors_) out.push_back(d.name);
  return out;
}

const PrimeDivisor* SurfaceModel::find(const std::string& name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? nullptr : &divisors_[it->second];
}

const PrimeDivisor& SurfaceModel::at(const std::string& name) const {
  const auto* d = find(name);
  if (!d) throw InvalidModelError("unknown prime divisor '" + name + "'");
  return *d;
}

bool SurfaceModel::is_exceptional(const std::string& name) const {
  return at(name).origin == CurveOrigin::Exceptional;
}

void SurfaceModel::validate_new_name(const std::string& name) const {
  if (name.empty()) throw InvalidModelError("prime divisor name must not be empty");
  if (index_.count(name)) throw InvalidModelError("duplicate prime divisor name '" + name + "'");
}

void SurfaceModel::declare_curve(const std::string& name, IntVector class_vector) {
  validate_new_name(name);
  if (class_vector.size() != rank()) {
    throw InvalidModelError("class of '" + name + "' has length " +
                            std::to_string(class_vector.size()) + ", lattice rank is " +
                            std::to_string(rank()));
  }
  const auto base = base_class(class_vector);
  const bool base_effective =
      std::all_of(base.begin(), base.end(), [](const Integer& x) { return x >= 0; }) &&
      std::any_of(base.begin(), base.end(), [](const Integer& x) { return x > 0; });
  const bool exceptional_ok = std::all_of(class_vector.begin() + static_cast<std::ptrdiff_t>(base_rank()),
                                          class_vector.end(),
                                          [](const Integer& x) { return x <= 0; });
  if (!base_effective || !exceptional_ok) {
    throw InvalidModelError("class of '" + name + "' is not representable by an irreducible curve");
  }
  const Rational genus = arithmetic_genus(class_vector);
  if (!is_integral(genus) || genus < 0) {
    throw InvalidModelError("class of '" + name + "' has arithmetic genus " + to_string(genus) +
                            "; not representable by an irreducible curve");
  }
  index_.emplace(name, divisors_.size());
  divisors_.push_back({name, std::move(class_vector), true, CurveOrigin::Declared});
}

void SurfaceModel::blow_up(const std::string& exceptional_name,
                           const std::vector<Incidence>& incident) {
  validate_new_name(exceptional_name);
  std::set<std::string> seen;
  for (const auto& inc : incident) {
    const auto& curve = at(inc.curve);
    if (!curve.is_curve) throw InvalidModelError("'" + inc.curve + "' is not a tracked curve");
    if (!seen.insert(inc.curve).second) {
      throw InvalidModelError("curve '" + inc.curve + "' listed twice in blow-up '" +
                              exceptional_name + "'");
    }
    if (inc.multiplicity < 1) {
      throw InvalidModelError("multiplicity of '" + inc.curve + "' in blow-up '" +
                              exceptional_name + "' must be at least 1");
    }
    // A point of multiplicity m costs m(m-1)/2 of arithmetic genus.
    const Rational genus = arithmetic_genus(curve.class_vector);
    const long m = inc.multiplicity;
    if (genus < make_rational(m * (m - 1), 2)) {
      throw InvalidModelError("curve '" + inc.curve + "' of arithmetic genus " + to_string(genus) +
                              " cannot have a point of multiplicity " + std::to_string(m));
    }
  }
  for (std::size_t i = 0; i < incident.size(); ++i) {
    for (std::size_t j = i + 1; j < incident.size(); ++j) {
      const auto& x = at(incident[i].curve);
      const auto& y = at(incident[j].curve);
      const Integer budget = intersect(x.class_vector, y.class_vector);
      const Integer needed = Integer(incident[i].multiplicity) * incident[j].multiplicity;
      if (budget < needed) {
        throw InvalidModelError("blow-up '" + exceptional_name + "': " + x.name + "." + y.name +
                                " = " + to_string(budget) + " < " + to_string(needed) +
                                " required by the declared multiplicities");
      }
    }
  }

  const std::size_t old_rank = rank();
  IntMatrix gram(old_rank + 1, old_rank + 1);
  for (std::size_t r = 0; r < old_rank; ++r)
    for (std::size_t c = 0; c < old_rank; ++c) gram(r, c) = gram_(r, c);
  gram(old_rank, old_rank) = -1;
  gram_ = std::move(gram);
  basis_.push_back("e_" + exceptional_name);
  canonical_.push_back(1);
  for (auto& d : divisors_) d.class_vector.push_back(0);
  for (const auto& inc : incident) {
    divisors_[index_.at(inc.curve)].class_vector.back() = -inc.multiplicity;
  }
  IntVector e(old_rank + 1);
  e.back() = 1;
  index_.emplace(exceptional_name, divisors_.size());
  divisors_.push_back({exceptional_name, std::move(e), true, CurveOrigin::Exceptional});
}

IntVector SurfaceModel::pad(const IntVector& v) const {
  if (v.size() > rank()) {
    throw DimensionError("class of length " + std::to_string(v.size()) +
                         " exceeds lattice rank " + std::to_string(rank()));
  }
  IntVector out = v;
  out.resize(rank());
  return out;
}

RationalVector SurfaceModel::total_class(const QDivisor& d) const {
  const IntVector residual = pad(d.residual());
  RationalVector total(residual.begin(), residual.end());
  for (const auto& [name, c] : d.named()) {
    const auto& cls = at(name).class_vector;
    for (std::size_t i = 0; i < cls.size(); ++i) total[i] += c * cls[i];
  }
  return total;
}

IntVector SurfaceModel::integral_class(const QDivisor& d) const {
  const RationalVector total = total_class(d);
  IntVector out;
  out.reserve(total.size());
  for (const auto& x : total) {
    if (!is_integral(x)) {
      throw DomainError("divisor " + format_divisor(d) + " has a non-integral class");
    }
    out.push_back(x.get_num());
  }
  return out;
}

Rational SurfaceModel::intersect(const RationalVector& a, const RationalVector& b) const {
  if (a.size() != rank() || b.size() != rank()) {
    throw DimensionError("intersect: class length does not match lattice rank");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (gram_(i, j) != 0) s += a[i] * gram_(i, j) * b[j];
    }
  }
  return s;
}

Rational SurfaceModel::intersect(const QDivisor& a, const QDivisor& b) const {
  return intersect(total_class(a), total_class(b));
}

Integer SurfaceModel::intersect(const IntVector& a, const IntVector& b) const {
  const IntVector pa = pad(a);
  const IntVector pb = pad(b);
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (pa[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (gram_(i, j) != 0) s += pa[i] * gram_(i, j) * pb[j];
    }
  }
  return s;
}

Rational SurfaceModel::arithmetic_genus(const RationalVector& d) const {
  RationalVector d_plus_k = d;
  for (std::size_t i = 0; i < d.size() && i < canonical_.size(); ++i) d_plus_k[i] += canonical_[i];
  return intersect(d, d_plus_k) / 2 + 1;
}

Rational SurfaceModel::arithmetic_genus(const IntVector& d) const {
  const IntVector p = pad(d);
  return arithmetic_genus(RationalVector(p.begin(), p.end()));
}

IntVector SurfaceModel::base_class(const IntVector& v) const {
  const IntVector p = pad(v);
  return IntVector(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(base_rank()));
}

IntVector SurfaceModel::pullback_from_base(const IntVector& base) const {
  if (base.size() != base_rank()) {
    throw DimensionError("base class must have length " + std::to_string(base_rank()));
  }
  return pad(base);
}

Inertia SurfaceModel::signature() const { return inertia(to_rational(gram_)); }

}  // namespace kvv
