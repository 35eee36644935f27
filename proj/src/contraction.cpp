#include "kvv/contraction.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace kvv {

std::string to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Terminal:
      return "terminal";
    case SingularityClass::Canonical:
      return "canonical";
    case SingularityClass::Klt:
      return "klt";
    case SingularityClass::Lc:
      return "lc";
    case SingularityClass::NotLc:
      return "not_lc";
  }
  return "unknown";
}

SingularityClass classify_discrepancy(const Rational& minimum) {
  if (minimum > 0) return SingularityClass::Terminal;
  if (minimum >= 0) return SingularityClass::Canonical;
  if (minimum > -1) return SingularityClass::Klt;
  if (minimum >= -1) return SingularityClass::Lc;
  return SingularityClass::NotLc;
}

namespace {

Rational lookup(const std::vector<std::pair<std::string, Rational>>& values, const std::string& name) {
  for (const auto& [n, v] : values)
    if (n == name) return v;
  throw InvalidModelError("'" + name + "' is not a contracted curve");
}

}  // namespace

Rational DiscrepancyReport::at(const std::string& name) const { return lookup(values, name); }

Rational NefReport::at(const std::string& name) const { return lookup(degrees, name); }

std::string to_string(ChainLabel label) {
  return label == ChainLabel::AnChain ? "A_n_chain" : "weighted_cyclic";
}

std::string SingularPointReport::type() const {
  return "1/" + n.get_str() + "(1," + q.get_str() + ")";
}

std::pair<Integer, Integer> hirzebruch_jung(const std::vector<Integer>& chain) {
  if (chain.empty()) throw DomainError("hirzebruch_jung: empty chain");
  for (const auto& b : chain) {
    if (b < 2) throw DomainError("hirzebruch_jung: entries must be at least 2");
  }
  Rational value = chain.back();
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    value = Rational(*it) - 1 / value;
  }
  return {value.get_num(), value.get_den()};
}

std::string ClassGroupReport::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    out << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

ClassGroupReport quotient_group(const IntMatrix& relations) {
  const auto snf = smith_normal_form(relations);
  ClassGroupReport report;
  std::size_t nonzero = 0;
  for (const auto& f : snf.invariant_factors()) {
    if (f == 0) continue;
    ++nonzero;
    if (f > 1) report.torsion.push_back(f);
  }
  report.rank = relations.cols() - nonzero;
  return report;
}

// ---------------------------------------------------------------------------

Contraction Contraction::contract(const SurfaceModel& model, const std::vector<std::string>& curves) {
  std::set<std::string> seen;
  for (const auto& name : curves) {
    const auto& d = model.at(name);
    if (!d.is_curve) throw InvalidModelError("'" + name + "' is not a tracked curve");
    if (!seen.insert(name).second) {
      throw InvalidModelError("curve '" + name + "' listed twice in contraction");
    }
  }

  Contraction c;
  c.source_ = model;
  c.contracted_ = curves;
  const std::size_t k = curves.size();
  c.gram_ = RationalMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      c.gram_(i, j) = Rational(model.intersect(model.at(curves[i]).class_vector,
                                               model.at(curves[j]).class_vector));
  if (!is_negative_definite(c.gram_)) {
    throw NotContractibleError("not contractible (numerical criterion): Gram matrix of the curves is "
                               "not negative definite");
  }
  c.gram_inverse_ = inverse(c.gram_);
  return c;
}

bool Contraction::is_contracted(const std::string& name) const {
  return std::find(contracted_.begin(), contracted_.end(), name) != contracted_.end();
}

QDivisor Contraction::pullback(const QDivisor& d_on_target) const {
  for (const auto& [name, coeff] : d_on_target.named()) {
    if (is_contracted(name)) {
      throw InvalidModelError("pullback: representative has coefficient " + to_string(coeff) +
                              " on contracted curve '" + name + "'");
    }
  }
  const RationalVector total = source_.total_class(d_on_target);
  const std::size_t k = contracted_.size();
  // Solve gram * a = -(D . Gamma_j).
  RationalVector rhs(k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto& cls = source_.at(contracted_[j]).class_vector;
    rhs[j] = -source_.intersect(total, RationalVector(cls.begin(), cls.end()));
  }
  const RationalVector a = gram_inverse_ * rhs;
  QDivisor out = d_on_target;
  for (std::size_t j = 0; j < k; ++j) out.add(contracted_[j], a[j]);
  return out;
}

QDivisor Contraction::pushforward(const QDivisor& d) const {
  QDivisor out = QDivisor::from_class(d.residual());
  for (const auto& [name, coeff] : d.named()) {
    if (!is_contracted(name)) out.set(name, coeff);
  }
  return out;
}

DiscrepancyReport Contraction::discrepancies() const {
  const QDivisor canonical = canonical_divisor();
  const QDivisor pulled = pullback(canonical);
  DiscrepancyReport report;
  for (const auto& name : contracted_) {
    const Rational a = -(pulled.coefficient(name) - canonical.coefficient(name));
    report.values.emplace_back(name, a);
    if (!report.minimum || a < *report.minimum) report.minimum = a;
  }
  report.classification =
      report.minimum ? classify_discrepancy(*report.minimum) : SingularityClass::Terminal;
  return report;
}

std::vector<SingularPointReport> Contraction::classify_singularities() const {
  const std::size_t k = contracted_.size();
  std::vector<std::vector<std::size_t>> adjacent(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Rational x = gram_(i, j);
      if (x == 0) continue;
      if (x < 0) {
        throw InvalidModelError("distinct curves '" + contracted_[i] + "' and '" + contracted_[j] +
                                "' intersect negatively");
      }
      if (x > 1) {
        throw UnsupportedConfigurationError("unsupported configuration: '" + contracted_[i] +
                                            "' and '" + contracted_[j] + "' meet with multiplicity " +
                                            to_string(x));
      }
      adjacent[i].push_back(j);
      adjacent[j].push_back(i);
    }
  }

  std::vector<bool> visited(k, false);
  std::vector<SingularPointReport> reports;
  for (std::size_t seed = 0; seed < k; ++seed) {
    if (visited[seed]) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{seed};
    visited[seed] = true;
    std::size_t edge_ends = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      members.push_back(v);
      edge_ends += adjacent[v].size();
      for (const auto w : adjacent[v]) {
        if (!visited[w]) {
          visited[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    const bool branch = std::any_of(members.begin(), members.end(),
                                    [&](std::size_t v) { return adjacent[v].size() > 2; });
    if (branch || edge_ends / 2 != members.size() - 1) {
      std::string names;
      for (const auto v : members) names += (names.empty() ? "" : ", ") + contracted_[v];
      throw UnsupportedConfigurationError("unsupported configuration: component {" + names +
                                          "} is not a chain");
    }

    // Walk the chain from its first endpoint in contraction order.
    std::size_t start = members.front();
    for (const auto v : members) {
      if (adjacent[v].size() <= 1) {
        start = v;
        break;
      }
    }
    SingularPointReport report;
    std::size_t previous = k;
    std::size_t current = start;
    for (;;) {
      report.component.push_back(contracted_[current]);
      const Rational self = gram_(current, current);
      report.self_intersections.push_back(-self.get_num());
      std::size_t next = k;
      for (const auto w : adjacent[current])
        if (w != previous) next = w;
      if (next == k) break;
      previous = current;
      current = next;
    }
    for (std::size_t i = 0; i < report.self_intersections.size(); ++i) {
      if (report.self_intersections[i] < 2) {
        throw UnsupportedConfigurationError(
            "unsupported configuration: '" + report.component[i] + "' has self-intersection " +
            Integer(-report.self_intersections[i]).get_str() + " (chain is not a minimal resolution)");
      }
    }
    std::tie(report.n, report.q) = hirzebruch_jung(report.self_intersections);
    report.label = std::all_of(report.self_intersections.begin(), report.self_intersections.end(),
                               [](const Integer& b) { return b == 2; })
                       ? ChainLabel::AnChain
                       : ChainLabel::WeightedCyclic;
    reports.push_back(std::move(report));
  }
  return reports;
}

IntMatrix Contraction::contracted_classes() const {
  IntMatrix m(contracted_.size(), source_.rank());
  for (std::size_t i = 0; i < contracted_.size(); ++i) {
    const auto& cls = source_.at(contracted_[i]).class_vector;
    for (std::size_t j = 0; j < cls.size(); ++j) m(i, j) = cls[j];
  }
  return m;
}

ClassGroupReport Contraction::class_group() const { return quotient_group(contracted_classes()); }

NefReport Contraction::relative_nef(const QDivisor& d) const {
  NefReport report;
  for (const auto& name : contracted_) {
    const Rational degree = source_.intersect(d, QDivisor::prime(name));
    report.degrees.emplace_back(name, degree);
    if (degree < 0) report.nef = false;
  }
  return report;
}

QDivisor Contraction::default_witness() const {
  IntVector base(source_.base_rank());
  base[0] = 1;
  return QDivisor::from_class(source_.pullback_from_base(base));
}

void Contraction::require_rank_one(const char* what) const {
  if (target_rank() != 1) {
    throw RankError(std::string(what) + " requires a target of Picard rank 1, got rank " +
                    std::to_string(target_rank()));
  }
}

Rational Contraction::degree_against(const QDivisor& d_on_target,
                                     const std::optional<QDivisor>& witness) const {
  require_rank_one("degree_against");
  const QDivisor w = witness ? *witness : default_witness();
  for (const auto& [name, coeff] : w.named()) {
    if (is_contracted(name)) {
      throw InvalidModelError("witness curve is supported on contracted curve '" + name + "'");
    }
  }
  return source_.intersect(pullback(d_on_target), w);
}

bool Contraction::is_ample_rank1(const QDivisor& d_on_target,
                                 const std::optional<QDivisor>& witness) const {
  return degree_against(d_on_target, witness) > 0;
}

std::optional<Rational> Contraction::numerically_proportional(
    const QDivisor& d1, const QDivisor& d2, const std::optional<QDivisor>& witness) const {
  require_rank_one("numerically_proportional");
  const Rational deg2 = degree_against(d2, witness);
  if (deg2 == 0) return std::nullopt;
  return degree_against(d1, witness) / deg2;
}

}  // namespace kvv
