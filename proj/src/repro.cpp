#include "kvv/repro.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "kvv/cohomology.hpp"
#include "kvv/cone.hpp"

namespace kvv {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int Report::exit_code() const { return passed() ? 0 : 1; }

std::optional<std::string> Report::first_failure() const {
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!c.error.empty()) return c.id + ": " + c.error;
    if (!c.mismatches.empty()) return c.id + ": " + c.mismatches.front();
    return c.id + ": failed";
  }
  return std::nullopt;
}

namespace {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Rational read_rational(const Json& node) {
  if (node.is_number_integer()) return Rational(Integer(node.dump()));
  if (node.is_string()) return parse_rational(node.get<std::string>());
  throw ScenarioError("expected a rational, got " + node.dump());
}

Integer read_integer(const Json& node) {
  if (node.is_number_integer()) return Integer(node.dump());
  if (node.is_string()) return parse_integer(node.get<std::string>());
  throw ScenarioError("expected an integer, got " + node.dump());
}

bool read_bool(const Json& node) {
  if (!node.is_boolean()) throw ScenarioError("expected a boolean, got " + node.dump());
  return node.get<bool>();
}

Json divisor_json(const SurfaceModel& model, const QDivisor& d) { return to_json(to_divisor_expr(model, d)); }

Json class_group_json(const ClassGroupReport& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
  return Json{{"rank", g.rank}, {"torsion", torsion}, {"group", g.to_string()}};
}

ClassGroupReport read_class_group(const Json& node) {
  ClassGroupReport g;
  g.rank = static_cast<std::size_t>(read_integer(node.at("rank")).get_ui());
  for (const auto& t : node.at("torsion")) g.torsion.push_back(read_integer(t));
  return g;
}

/// Collects mismatches; every comparison is exact.
class Expectations {
 public:
  explicit Expectations(CheckResult& result) : result_(result) {}

  template <typename T, typename Show>
  void compare(const std::string& what, const T& expected, const T& computed, Show show) {
    if (!(expected == computed)) {
      result_.mismatches.push_back(what + ": expected " + show(expected) + ", got " + show(computed));
    }
  }
  void rational(const std::string& what, const Json& expected, const Rational& computed) {
    compare(what, read_rational(expected), computed, [](const Rational& x) { return to_string(x); });
  }
  void integer(const std::string& what, const Json& expected, const Integer& computed) {
    compare(what, read_integer(expected), computed, [](const Integer& x) { return x.get_str(); });
  }
  void boolean(const std::string& what, const Json& expected, bool computed) {
    compare(what, read_bool(expected), computed, [](bool b) { return std::string(b ? "true" : "false"); });
  }
  void divisor(const std::string& what, const SurfaceModel& model, const Json& expected, const QDivisor& computed) {
    const QDivisor e = to_qdivisor(model, parse_divisor_expr(expected, what));
    compare(what, e, computed, [&](const QDivisor& d) { return describe(model, d); });
  }
  void class_group(const std::string& what, const Json& expected, const ClassGroupReport& computed) {
    compare(what, read_class_group(expected), computed, [](const ClassGroupReport& g) { return g.to_string(); });
  }

  static std::string describe(const SurfaceModel& model, const QDivisor& d) {
    std::string text = format_divisor(d, model.names());
    const auto& r = d.residual();
    if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) {
      std::string cls;
      for (std::size_t i = 0; i < r.size(); ++i) cls += (i ? "," : "") + r[i].get_str();
      text += " + class[" + cls + "]";
    }
    return text;
  }

 private:
  CheckResult& result_;
};

const Json* optional_param(const Json& params, const char* key) {
  const auto it = params.find(key);
  return it == params.end() ? nullptr : &*it;
}

std::map<std::string, int> census(const std::vector<SingularPointReport>& points) {
  std::map<std::string, int> out;
  for (const auto& p : points) ++out[p.type()];
  return out;
}

Json census_json(const std::map<std::string, int>& c) {
  Json out = Json::object();
  for (const auto& [type, count] : c) out[type] = count;
  return out;
}

Json points_json(const std::vector<SingularPointReport>& points) {
  Json out = Json::array();
  for (const auto& p : points) {
    Json chain = Json::array();
    for (const auto& b : p.self_intersections) chain.push_back(integer_json(-b));
    out.push_back(Json{{"type", p.type()},
                       {"label", to_string(p.label)},
                       {"component", p.component},
                       {"self_intersections", chain}});
  }
  return out;
}

Json discrepancy_json(const DiscrepancyReport& d) {
  Json values = Json::object();
  for (const auto& [name, a] : d.values) values[name] = to_string(a);
  return Json{{"values", values},
              {"minimum", d.minimum ? Json(to_string(*d.minimum)) : Json(nullptr)},
              {"classification", to_string(d.classification)}};
}

using Runner = std::function<void(const BuiltScenario&, const Json&, CheckResult&, Expectations&)>;

void run_intersection_table(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  Json rows = Json::array();
  for (const auto& pair : params.at("pairs")) {
    const std::string a = pair.at("a").get<std::string>();
    const std::string c = pair.at("b").get<std::string>();
    const Rational value = b.model.intersect(QDivisor::prime(a), QDivisor::prime(c));
    rows.push_back(Json{{"a", a}, {"b", c}, {"value", to_string(value)}});
    e.rational(a + "." + c, pair.at("expect"), value);
  }
  r.values["pairs"] = rows;
}

void run_pullback(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  QDivisor pulled = b.contraction.pullback(b.divisor(params.at("divisor").get<std::string>()));
  if (const Json* negate = optional_param(params, "negate"); negate && read_bool(*negate)) pulled = -pulled;
  r.values["pullback"] = divisor_json(b.model, pulled);
  Json contracted = Json::object();
  for (const auto& name : b.contraction.contracted()) contracted[name] = to_string(pulled.coefficient(name));
  r.values["contracted_coefficients"] = contracted;
  e.divisor("pullback", b.model, params.at("expect"), pulled);
}

void run_discrepancies(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const DiscrepancyReport d = b.contraction.discrepancies();
  r.values = discrepancy_json(d);
  if (const Json* expect = optional_param(params, "expect")) {
    for (const auto& [name, value] : expect->items()) e.rational("a(" + name + ")", value, d.at(name));
  }
  if (const Json* minimum = optional_param(params, "minimum")) {
    if (!d.minimum) {
      r.mismatches.push_back("minimum: expected " + minimum->dump() + ", got none (nothing contracted)");
    } else {
      e.rational("minimum", *minimum, *d.minimum);
    }
  }
  if (const Json* cls = optional_param(params, "classification")) {
    e.compare("classification", cls->get<std::string>(), to_string(d.classification),
              [](const std::string& s) { return s; });
  }
}

void run_target_rank(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const auto rank = b.contraction.target_rank();
  r.values["target_rank"] = rank;
  e.integer("target_rank", params.at("expect"), Integer(static_cast<unsigned long>(rank)));
}

std::optional<QDivisor> witness_of(const BuiltScenario& b, const Json& params) {
  if (const Json* w = optional_param(params, "witness")) return b.divisor(w->get<std::string>());
  return std::nullopt;
}

void run_degree(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const QDivisor& d = b.divisor(params.at("divisor").get<std::string>());
  const Rational degree = b.contraction.degree_against(d, witness_of(b, params));
  r.values["degree"] = to_string(degree);
  r.values["ample"] = degree > 0;
  if (const Json* expect = optional_param(params, "expect")) e.rational("degree", *expect, degree);
  if (const Json* ample = optional_param(params, "ample")) e.boolean("ample", *ample, degree > 0);
}

void run_proportional(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const auto ratio = b.contraction.numerically_proportional(b.divisor(params.at("divisor").get<std::string>()),
                                                            b.divisor(params.at("reference").get<std::string>()),
                                                            witness_of(b, params));
  if (!ratio) throw DomainError("reference divisor is numerically trivial");
  r.values["ratio"] = to_string(*ratio);
  if (const Json* expect = optional_param(params, "expect")) e.rational("ratio", *expect, *ratio);
}

void run_singularities(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const auto points = b.contraction.classify_singularities();
  const auto c = census(points);
  r.values["points"] = points_json(points);
  r.values["census"] = census_json(c);
  r.values["total"] = points.size();
  if (const Json* expect = optional_param(params, "expect")) {
    std::map<std::string, int> wanted;
    for (const auto& [type, count] : expect->items()) wanted[type] = static_cast<int>(read_integer(count).get_si());
    e.compare("census", wanted, c, [](const std::map<std::string, int>& m) { return census_json(m).dump(); });
  }
  if (const Json* total = optional_param(params, "total")) {
    e.integer("total", *total, Integer(static_cast<unsigned long>(points.size())));
  }
}

void run_class_group(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const ClassGroupReport g = b.contraction.class_group();
  r.values = class_group_json(g);
  e.class_group("class_group", params.at("expect"), g);
}

void run_h0_anticanonical(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const auto report =
      verify_h0_anticanonical_zero(b.contraction, b.divisor(params.at("exceptional_part").get<std::string>()));
  r.values["identity_holds"] = report.identity_holds;
  r.values["left_side"] = divisor_json(b.model, report.left_side);
  r.values["left_class"] = int_vector_json(report.left_class);
  r.values["base_class"] = int_vector_json(report.base_class);
  r.values["h0"] = report.h0 ? integer_json(*report.h0) : Json(nullptr);
  if (!report.detail.empty()) r.values["detail"] = report.detail;
  if (!report.identity_holds) r.mismatches.push_back("class identity: " + report.detail);
  if (const Json* expect = optional_param(params, "expect_base_class")) {
    IntVector wanted;
    for (const auto& x : *expect) wanted.push_back(read_integer(x));
    e.compare("base_class", wanted, report.base_class, [](const IntVector& v) { return int_vector_json(v).dump(); });
  }
  if (const Json* expect = optional_param(params, "expect_h0")) {
    if (!report.h0) {
      r.mismatches.push_back("h0: expected " + expect->dump() + ", got none");
    } else {
      e.integer("h0", *expect, *report.h0);
    }
  }
}

void run_kvv_failure(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const auto report = verify_kvv_failure(b.contraction, b.divisor(params.at("divisor").get<std::string>()));
  Json nef = Json::object();
  for (const auto& [name, degree] : report.relative_nef.degrees) nef[name] = to_string(degree);
  r.values["expansion"] = divisor_json(b.model, report.pullback_expansion);
  r.values["floor"] = divisor_json(b.model, report.floor);
  r.values["relatively_nef"] = report.relative_nef.nef;
  r.values["nef_degrees"] = nef;
  r.values["k_dot_floor"] = to_string(report.k_dot_floor);
  r.values["floor_squared"] = to_string(report.floor_squared);
  r.values["euler_characteristic"] = to_string(report.euler_characteristic);
  r.values["h1_nonzero"] = report.h1_nonzero;
  r.values["not_globally_f_split"] = report.not_globally_f_split;
  r.values["no_w2_liftable_log_resolution"] = report.no_w2_liftable_log_resolution;
  r.values["leray_note"] = report.leray_note;

  const Json* expect = optional_param(params, "expect");
  if (!expect) return;
  if (const Json* x = optional_param(*expect, "expansion")) e.divisor("expansion", b.model, *x, report.pullback_expansion);
  if (const Json* x = optional_param(*expect, "floor")) e.divisor("floor", b.model, *x, report.floor);
  if (const Json* x = optional_param(*expect, "nef_degrees")) {
    for (const auto& [name, value] : x->items()) e.rational("floor." + name, value, report.relative_nef.at(name));
  }
  if (const Json* x = optional_param(*expect, "k_dot_floor")) e.rational("k_dot_floor", *x, report.k_dot_floor);
  if (const Json* x = optional_param(*expect, "floor_squared")) e.rational("floor_squared", *x, report.floor_squared);
  if (const Json* x = optional_param(*expect, "euler_characteristic")) {
    e.rational("euler_characteristic", *x, report.euler_characteristic);
  }
  if (const Json* x = optional_param(*expect, "h1_nonzero")) e.boolean("h1_nonzero", *x, report.h1_nonzero);
  if (const Json* x = optional_param(*expect, "not_globally_f_split")) {
    e.boolean("not_globally_f_split", *x, report.not_globally_f_split);
  }
  if (const Json* x = optional_param(*expect, "no_w2_liftable_log_resolution")) {
    e.boolean("no_w2_liftable_log_resolution", *x, report.no_w2_liftable_log_resolution);
  }
}

void run_cone(const BuiltScenario& b, const Json& params, CheckResult& r, Expectations& e) {
  const QDivisor& a = b.divisor(params.at("divisor").get<std::string>());
  int summand = -1;
  if (const Json* m = optional_param(params, "summand")) summand = static_cast<int>(read_integer(*m).get_si());
  ConeModel cone = build_cone(b.contraction, a);
  // H^1(T, O(mA)) = H^1(T, O(-(-m)A)).
  const auto kvv = verify_kvv_failure(b.contraction, Rational(-summand) * a);
  cone = local_cohomology_certificate(std::move(cone), summand, kvv.h1_nonzero);

  r.values["r"] = to_string(cone.r);
  r.values["section_discrepancy"] = to_string(cone.section_discrepancy);
  r.values["q_gorenstein"] = cone.verdicts.q_gorenstein;
  r.values["crepant_partial_resolution"] = cone.verdicts.crepant_partial_resolution;
  r.values["q_factorial"] = cone.verdicts.q_factorial ? Json(*cone.verdicts.q_factorial) : Json(nullptr);
  r.values["class_group"] = cone.cone_class_group ? class_group_json(*cone.cone_class_group) : Json(nullptr);
  r.values["cm"] = cone.verdicts.cm ? Json(*cone.verdicts.cm) : Json(nullptr);
  r.values["cm_certificate_summand"] =
      cone.verdicts.cm_certificate_summand ? Json(*cone.verdicts.cm_certificate_summand) : Json(nullptr);
  r.values["klt"] = cone.klt_provenance;
  r.values["summary"] = summarize(cone);

  const Json* expect = optional_param(params, "expect");
  if (!expect) return;
  if (const Json* x = optional_param(*expect, "r")) e.rational("r", *x, cone.r);
  if (const Json* x = optional_param(*expect, "section_discrepancy")) {
    e.rational("section_discrepancy", *x, cone.section_discrepancy);
  }
  auto optional_bool = [&](const char* key, const std::optional<bool>& value) {
    const Json* x = optional_param(*expect, key);
    if (!x) return;
    if (!value) {
      r.mismatches.push_back(std::string(key) + ": expected " + x->dump() + ", got undetermined");
    } else {
      e.boolean(key, *x, *value);
    }
  };
  optional_bool("cm", cone.verdicts.cm);
  optional_bool("q_factorial", cone.verdicts.q_factorial);
  if (const Json* x = optional_param(*expect, "class_group")) {
    if (!cone.cone_class_group) {
      r.mismatches.push_back("class_group: expected " + x->dump() + ", got none (non-integral polarization)");
    } else {
      e.class_group("class_group", *x, *cone.cone_class_group);
    }
  }
}

void run_bend_and_break(const BuiltScenario&, const Json& params, CheckResult& r, Expectations& e) {
  Json rows = Json::array();
  for (const auto& c : params.at("cases")) {
    const int p = static_cast<int>(read_integer(c.at("p")).get_si());
    const int multiple = static_cast<int>(read_integer(c.at("multiple")).get_si());
    const CaseVerdict verdict = multiple_vanishing_verdict(p, multiple);
    rows.push_back(Json{{"p", p},
                        {"multiple", multiple},
                        {"lower_bound", std::to_string(multiple)},
                        {"threshold", to_string(limiting_threshold(p))},
                        {"verdict", to_string(verdict)}});
    if (const Json* expect = optional_param(c, "expect")) {
      e.compare("p=" + std::to_string(p) + ",m=" + std::to_string(multiple), expect->get<std::string>(),
                to_string(verdict), [](const std::string& s) { return s; });
    }
  }
  r.values["cases"] = rows;
}

struct CheckKind {
  Runner run;
  const char* citation;
};

const std::map<std::string, CheckKind>& check_kinds() {
  static const std::map<std::string, CheckKind> kinds = {
      {"intersection_table", {run_intersection_table, "intersection numbers of the strict transforms after the blow-ups"}},
      {"pullback", {run_pullback, "Mumford pullback: the unique lift orthogonal to every contracted curve"}},
      {"discrepancies", {run_discrepancies, "K_S = psi^*K_T + sum a(G) G; klt iff every a(G) > -1"}},
      {"target_rank", {run_target_rank, "Picard rank of the contracted surface"}},
      {"degree", {run_degree, "degree against the pullback of a general fibre; rank one means positive iff ample"}},
      {"proportional", {run_proportional, "numerical proportionality on a rank-one target"}},
      {"singularities", {run_singularities, "Hirzebruch-Jung continued fractions of the contracted chains"}},
      {"class_group", {run_class_group, "Cl(T) as the Smith normal form quotient by the contracted curves"}},
      {"h0_anticanonical", {run_h0_anticanonical, "H^0(T,-K_T) via floor(-psi^*K_T) pushed to the quadric"}},
      {"kvv_failure", {run_kvv_failure, "Riemann-Roch on S with relative Kawamata-Viehweg for the Leray step; chi < 0 forces h^1 != 0"}},
      {"cone", {run_cone, "cone over (T, A): K_T = rA, section discrepancy -(1+r), vertex cohomology from H^1(T, mA)"}},
      {"bend_and_break", {run_bend_and_break, "bend-and-break degree bound against the limiting threshold 4/(p-1)"}},
  };
  return kinds;
}

}  // namespace

Report run_scenario(const Scenario& scenario, const BuiltScenario& built) {
  Report report;
  report.scenario_name = scenario.name;
  report.digest = scenario_digest(scenario);
  for (const auto& check : scenario.checks) {
    CheckResult result;
    result.id = check.id;
    result.type = check.type;
    const auto kind = check_kinds().find(check.type);
    if (kind == check_kinds().end()) {
      result.error = "unknown check type '" + check.type + "'";
    } else {
      result.citation = kind->second.citation;
      Expectations expectations(result);
      try {
        kind->second.run(built, check.params, result, expectations);
      } catch (const std::exception& e) {
        result.error = e.what();
      }
    }
    result.passed = result.error.empty() && result.mismatches.empty();
    report.checks.push_back(std::move(result));
  }
  return report;
}

Report run_scenario(const Scenario& scenario) { return run_scenario(scenario, build(scenario)); }

Report run_repro() { return run_scenario(keel_mckernan_scenario()); }

Report explore_frobenius(int p, int points) {
  if (p < 2) throw DomainError("explore: p must be at least 2");
  if (points < 1) throw DomainError("explore: need at least one point");
  const long c_squared = static_cast<long>(p) * (2 - points);
  if (c_squared >= 0) {
    throw NotContractibleError("C not contractible (C^2 = " + std::to_string(c_squared) + " >= 0)");
  }
  const Scenario scenario = construction_scenario(p, points);
  const BuiltScenario built = build(scenario);
  const Contraction& c = built.contraction;

  const QDivisor minus_k = -c.canonical_divisor();
  const Rational degree = c.degree_against(minus_k);
  const std::string verdict = degree > 0 ? "del_pezzo" : degree == 0 ? "K_trivial" : "canonically_ample";
  const auto singular = c.classify_singularities();

  Json out = Json::object();
  out["construction"] = "extrapolated construction";
  out["p"] = p;
  out["points"] = points;
  out["blowups"] = scenario.blowups.size();
  out["contracted"] = c.contracted();
  out["c_squared"] = c_squared;
  out["target_rank"] = c.target_rank();
  out["discrepancies"] = discrepancy_json(c.discrepancies());
  out["degree_minus_k"] = to_string(degree);
  out["verdict"] = verdict;
  out["singular_points"] = points_json(singular);
  out["census"] = census_json(census(singular));
  out["total_singular_points"] = singular.size();
  out["class_group"] = class_group_json(c.class_group());

  Report report;
  report.scenario_name = scenario.name;
  report.digest = scenario_digest(scenario);
  report.exploration = std::move(out);
  return report;
}

Json to_json(const Report& report) {
  Json out = Json::object();
  out["schema"] = kReportSchema;
  out["scenario"] = report.scenario_name;
  out["digest"] = report.digest;
  if (report.exploration) {
    out["exploration"] = *report.exploration;
    return out;
  }
  out["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json node = Json::object();
    node["id"] = c.id;
    node["type"] = c.type;
    node["passed"] = c.passed;
    node["values"] = c.values;
    if (!c.mismatches.empty()) node["mismatches"] = c.mismatches;
    if (!c.error.empty()) node["error"] = c.error;
    node["citation"] = c.citation;
    checks.push_back(node);
  }
  out["checks"] = checks;
  return out;
}

namespace {

std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_values(std::ostringstream& out, const CheckResult& c) {
  if (c.type == "intersection_table" && c.values.contains("pairs")) {
    std::map<std::string, std::map<std::string, std::string>> table;
    std::vector<std::string> order;
    for (const auto& row : c.values["pairs"]) {
      const std::string a = row["a"].get<std::string>();
      const std::string b = row["b"].get<std::string>();
      if (std::find(order.begin(), order.end(), a) == order.end()) order.push_back(a);
      if (std::find(order.begin(), order.end(), b) == order.end()) order.push_back(b);
      table[a][b] = table[b][a] = row["value"].get<std::string>();
    }
    out << "      " << std::string(4, ' ');
    for (const auto& n : order) out << std::setw(4) << n;
    out << "\n";
    for (const auto& a : order) {
      out << "      " << std::setw(4) << std::left << a << std::right;
      for (const auto& b : order) {
        const auto it = table[a].find(b);
        out << std::setw(4) << (it == table[a].end() ? "." : it->second);
      }
      out << "\n";
    }
    return;
  }
  for (const auto& [key, value] : c.values.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << "      " << key << ":\n";
      for (const auto& row : value) out << "        " << row.dump() << "\n";
    } else {
      out << "      " << key << ": " << plain(value) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "scenario: " << report.scenario_name << "\n";
  out << "digest:   " << report.digest << "\n";
  if (report.exploration) {
    const Json& e = *report.exploration;
    for (const auto& [key, value] : e.items()) {
      if (value.is_array() && !value.empty() && value.front().is_object()) {
        out << key << ":\n";
        for (const auto& row : value) out << "  " << row.dump() << "\n";
      } else {
        out << key << ": " << plain(value) << "\n";
      }
    }
    return out.str();
  }
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " (" << c.type << ")\n";
    if (!c.citation.empty()) out << "      # " << c.citation << "\n";
    render_values(out, c);
    for (const auto& m : c.mismatches) out << "      mismatch: " << m << "\n";
    if (!c.error.empty()) out << "      error: " << c.error << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed ? 1 : 0;
  out << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

void emit_report(const Report& report, ReportFormat format, const std::string& path, std::ostream& out) {
  const std::string text = format == ReportFormat::Json ? to_json(report).dump(2) + "\n" : render_text(report);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write report to '" + path + "'");
  file << text;
  if (!file.flush()) throw Error("cannot write report to '" + path + "'");
}

}  // namespace kvv
