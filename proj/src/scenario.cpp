#include "kvv/scenario.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace kvv {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ScenarioError(where + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& node, const std::string& where) {
  if (!node.is_string()) fail(where, "expected a string");
  return node.get<std::string>();
}

Integer as_integer(const Json& node, const std::string& where) {
  try {
    if (node.is_number_integer()) return Integer(node.dump());
    if (node.is_string()) return parse_integer(node.get<std::string>());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  fail(where, "expected an integer");
}

int as_int(const Json& node, const std::string& where) {
  const Integer v = as_integer(node, where);
  if (!v.fits_sint_p()) fail(where, "integer out of range");
  return static_cast<int>(v.get_si());
}

IntVector as_int_vector(const Json& node, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(as_integer(node[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Rational as_rational(const Json& node, const std::string& where) {
  try {
    if (node.is_number_integer()) return Rational(Integer(node.dump()));
    if (node.is_string()) return parse_rational(node.get<std::string>());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational string \"p/q\" or an integer");
}

BaseSurface parse_base(const Json& node, const std::string& where) {
  const std::string s = as_string(node, where);
  if (s == "quadric") return BaseSurface::Quadric;
  if (s == "plane") return BaseSurface::Plane;
  fail(where, "base must be \"quadric\" or \"plane\", got \"" + s + "\"");
}

struct CheckShape {
  std::vector<const char*> required;
  std::vector<const char*> divisor_refs;
};

const std::map<std::string, CheckShape>& check_shapes() {
  static const std::map<std::string, CheckShape> shapes = {
      {"intersection_table", {{"pairs"}, {}}},
      {"pullback", {{"divisor", "expect"}, {"divisor"}}},
      {"discrepancies", {{}, {}}},
      {"target_rank", {{"expect"}, {}}},
      {"degree", {{"divisor"}, {"divisor", "witness"}}},
      {"proportional", {{"divisor", "reference"}, {"divisor", "reference", "witness"}}},
      {"singularities", {{}, {}}},
      {"class_group", {{"expect"}, {}}},
      {"h0_anticanonical", {{"exceptional_part"}, {"exceptional_part"}}},
      {"kvv_failure", {{"divisor"}, {"divisor"}}},
      {"cone", {{"divisor"}, {"divisor"}}},
      {"bend_and_break", {{"cases"}, {}}},
  };
  return shapes;
}

}  // namespace

const std::vector<std::string>& known_check_types() {
  static const std::vector<std::string> types = [] {
    std::vector<std::string> t;
    for (const auto& [name, shape] : check_shapes()) t.push_back(name);
    return t;
  }();
  return types;
}

const DivisorSpec* Scenario::find_divisor(const std::string& name) const {
  for (const auto& d : divisors)
    if (d.name == name) return &d;
  return nullptr;
}

const QDivisor& BuiltScenario::divisor(const std::string& name) const {
  const auto it = divisors.find(name);
  if (it == divisors.end()) throw ScenarioError("unknown divisor '" + name + "'");
  return it->second;
}

DivisorExpr parse_divisor_expr(const Json& node, const std::string& where) {
  if (!node.is_object()) fail(where, "expected a divisor expression object");
  DivisorExpr expr;
  for (const auto& [key, value] : node.items()) {
    if (key != "name" && key != "terms" && key != "canonical" && key != "residual") {
      fail(where, "unknown field '" + key + "' in divisor expression");
    }
  }
  if (const auto it = node.find("terms"); it != node.end()) {
    if (!it->is_object()) fail(where + ".terms", "expected an object name -> rational");
    std::set<std::string> seen;
    for (const auto& [name, value] : it->items()) {
      expr.terms.emplace_back(name, as_rational(value, where + ".terms." + name));
    }
  }
  if (const auto it = node.find("canonical"); it != node.end()) {
    expr.canonical = as_integer(*it, where + ".canonical");
  }
  if (const auto it = node.find("residual"); it != node.end()) {
    expr.residual = as_int_vector(*it, where + ".residual");
  }
  return expr;
}

Json to_json(const DivisorExpr& expr) {
  Json out = Json::object();
  Json terms = Json::object();
  for (const auto& [name, c] : expr.terms) terms[name] = to_string(c);
  out["terms"] = terms;
  if (expr.canonical != 0) out["canonical"] = integer_json(expr.canonical);
  if (!expr.residual.empty()) out["residual"] = int_vector_json(expr.residual);
  return out;
}

Scenario parse_scenario(const Json& doc) {
  const std::string root = "scenario";
  if (!doc.is_object()) fail(root, "expected a JSON object");
  if (const auto it = doc.find("schema"); it != doc.end()) {
    if (as_string(*it, root + ".schema") != kScenarioSchema) {
      fail(root + ".schema", std::string("unsupported schema, expected \"") + kScenarioSchema + "\"");
    }
  }
  Scenario s;
  if (const auto it = doc.find("name"); it != doc.end()) s.name = as_string(*it, root + ".name");
  s.base = parse_base(require(doc, "base", root), root + ".base");

  if (const auto it = doc.find("curves"); it != doc.end()) {
    if (!it->is_array()) fail(root + ".curves", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = root + ".curves[" + std::to_string(i) + "]";
      const Json& node = (*it)[i];
      s.curves.push_back({as_string(require(node, "name", where), where + ".name"),
                          as_int_vector(require(node, "class", where), where + ".class")});
    }
  }
  if (const auto it = doc.find("blowups"); it != doc.end()) {
    if (!it->is_array()) fail(root + ".blowups", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = root + ".blowups[" + std::to_string(i) + "]";
      const Json& node = (*it)[i];
      BlowupSpec step;
      step.exceptional = as_string(require(node, "exceptional", where), where + ".exceptional");
      if (const auto inc = node.find("incident"); inc != node.end()) {
        if (!inc->is_array()) fail(where + ".incident", "expected an array");
        for (std::size_t j = 0; j < inc->size(); ++j) {
          const std::string w = where + ".incident[" + std::to_string(j) + "]";
          const Json& in = (*inc)[j];
          SurfaceModel::Incidence incidence;
          incidence.curve = as_string(require(in, "curve", w), w + ".curve");
          if (const auto m = in.find("mult"); m != in.end()) incidence.multiplicity = as_int(*m, w + ".mult");
          step.incident.push_back(std::move(incidence));
        }
      }
      s.blowups.push_back(std::move(step));
    }
  }
  if (const auto it = doc.find("contraction"); it != doc.end()) {
    if (!it->is_array()) fail(root + ".contraction", "expected an array of curve names");
    for (std::size_t i = 0; i < it->size(); ++i) {
      s.contraction.push_back(as_string((*it)[i], root + ".contraction[" + std::to_string(i) + "]"));
    }
  }
  if (const auto it = doc.find("divisors"); it != doc.end()) {
    if (!it->is_array()) fail(root + ".divisors", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = root + ".divisors[" + std::to_string(i) + "]";
      const Json& node = (*it)[i];
      DivisorSpec spec{as_string(require(node, "name", where), where + ".name"),
                       parse_divisor_expr(node, where)};
      if (s.find_divisor(spec.name)) fail(where + ".name", "duplicate divisor '" + spec.name + "'");
      s.divisors.push_back(std::move(spec));
    }
  }
  if (const auto it = doc.find("checks"); it != doc.end()) {
    if (!it->is_array()) fail(root + ".checks", "expected an array");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = root + ".checks[" + std::to_string(i) + "]";
      const Json& node = (*it)[i];
      CheckSpec check;
      check.id = as_string(require(node, "id", where), where + ".id");
      check.type = as_string(require(node, "type", where), where + ".type");
      if (!ids.insert(check.id).second) fail(where + ".id", "duplicate check id '" + check.id + "'");
      const auto shape = check_shapes().find(check.type);
      if (shape == check_shapes().end()) fail(where + ".type", "unknown check type '" + check.type + "'");
      for (const char* key : shape->second.required) require(node, key, where);
      for (const char* key : shape->second.divisor_refs) {
        const auto ref = node.find(key);
        if (ref == node.end()) continue;
        const std::string name = as_string(*ref, where + "." + key);
        if (!s.find_divisor(name)) fail(where + "." + key, "undeclared divisor '" + name + "'");
      }
      check.params = Json::object();
      for (const auto& [key, value] : node.items()) {
        if (key != "id" && key != "type") check.params[key] = value;
      }
      s.checks.push_back(std::move(check));
    }
  }
  return s;
}

Json to_json(const Scenario& s) {
  Json doc = Json::object();
  doc["schema"] = kScenarioSchema;
  doc["name"] = s.name;
  doc["base"] = to_string(s.base);
  Json curves = Json::array();
  for (const auto& c : s.curves) {
    curves.push_back(Json{{"name", c.name}, {"class", int_vector_json(c.class_vector)}});
  }
  doc["curves"] = curves;
  Json blowups = Json::array();
  for (const auto& b : s.blowups) {
    Json incident = Json::array();
    for (const auto& inc : b.incident) incident.push_back(Json{{"curve", inc.curve}, {"mult", inc.multiplicity}});
    blowups.push_back(Json{{"exceptional", b.exceptional}, {"incident", incident}});
  }
  doc["blowups"] = blowups;
  doc["contraction"] = s.contraction;
  Json divisors = Json::array();
  for (const auto& d : s.divisors) {
    Json node = Json::object();
    node["name"] = d.name;
    const Json expr = to_json(d.expr);
    for (const auto& [key, value] : expr.items()) node[key] = value;
    divisors.push_back(node);
  }
  doc["divisors"] = divisors;
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    Json node = Json::object();
    node["id"] = c.id;
    node["type"] = c.type;
    for (const auto& [key, value] : c.params.items()) node[key] = value;
    checks.push_back(node);
  }
  doc["checks"] = checks;
  return doc;
}

QDivisor to_qdivisor(const SurfaceModel& model, const DivisorExpr& expr) {
  QDivisor d;
  for (const auto& [name, c] : expr.terms) {
    model.at(name);
    d.add(name, c);
  }
  IntVector residual = model.pad(expr.residual);
  const IntVector& k = model.canonical_class();
  for (std::size_t i = 0; i < residual.size(); ++i) residual[i] += expr.canonical * k[i];
  d.set_residual(std::move(residual));
  return d;
}

DivisorExpr to_divisor_expr(const SurfaceModel& model, const QDivisor& d) {
  DivisorExpr expr;
  for (const auto& p : model.prime_divisors()) {
    const Rational c = d.coefficient(p.name);
    if (c != 0) expr.terms.emplace_back(p.name, c);
  }
  for (const auto& [name, c] : d.named()) {
    if (!model.find(name)) expr.terms.emplace_back(name, c);
  }
  if (std::any_of(d.residual().begin(), d.residual().end(), [](const Integer& x) { return x != 0; })) {
    expr.residual = d.residual();
  }
  return expr;
}

namespace {

void validate_check_names(const Scenario& s, const SurfaceModel& model) {
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    const auto& check = s.checks[i];
    const std::string where = "scenario.checks[" + std::to_string(i) + "]";
    auto curve = [&](const Json& node, const std::string& w) {
      const std::string name = as_string(node, w);
      if (!model.find(name)) fail(w, "unknown curve '" + name + "'");
    };
    if (check.type == "intersection_table") {
      const Json& pairs = check.params.at("pairs");
      if (!pairs.is_array()) fail(where + ".pairs", "expected an array");
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const std::string w = where + ".pairs[" + std::to_string(j) + "]";
        curve(require(pairs[j], "a", w), w + ".a");
        curve(require(pairs[j], "b", w), w + ".b");
        as_rational(require(pairs[j], "expect", w), w + ".expect");
      }
    }
    if (check.type == "discrepancies") {
      if (const auto it = check.params.find("expect"); it != check.params.end()) {
        if (!it->is_object()) fail(where + ".expect", "expected an object");
        for (const auto& [name, value] : it->items()) {
          as_rational(value, where + ".expect." + name);
        }
      }
    }
    for (const char* key : {"expect"}) {
      if (check.type != "pullback") continue;
      const DivisorExpr expr = parse_divisor_expr(check.params.at(key), where + "." + key);
      for (const auto& [name, c] : expr.terms) {
        if (!model.find(name)) fail(where + ".expect.terms." + name, "unknown curve '" + name + "'");
      }
    }
  }
}

}  // namespace

BuiltScenario build(const Scenario& s) {
  SurfaceModel model = s.base == BaseSurface::Quadric ? SurfaceModel::new_quadric() : SurfaceModel::new_plane();
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    try {
      model.declare_curve(s.curves[i].name, s.curves[i].class_vector);
    } catch (const Error& e) {
      fail("scenario.curves[" + std::to_string(i) + "]", e.what());
    }
  }
  for (std::size_t i = 0; i < s.blowups.size(); ++i) {
    try {
      model.blow_up(s.blowups[i].exceptional, s.blowups[i].incident);
    } catch (const Error& e) {
      fail("scenario.blowups[" + std::to_string(i) + "]", e.what());
    }
  }
  std::optional<Contraction> contraction;
  try {
    contraction = Contraction::contract(model, s.contraction);
  } catch (const Error& e) {
    fail("scenario.contraction", e.what());
  }
  std::map<std::string, QDivisor> divisors;
  for (std::size_t i = 0; i < s.divisors.size(); ++i) {
    try {
      divisors.emplace(s.divisors[i].name, to_qdivisor(model, s.divisors[i].expr));
    } catch (const Error& e) {
      fail("scenario.divisors[" + std::to_string(i) + "]", e.what());
    }
  }
  validate_check_names(s, model);
  return BuiltScenario{std::move(model), std::move(*contraction), std::move(divisors)};
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path + ": cannot open scenario file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioError(path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    Scenario s = parse_scenario(doc);
    build(s);
    return s;
  } catch (const ScenarioError& e) {
    throw ScenarioError(path + ": " + e.what());
  }
}

std::string scenario_digest(const Scenario& scenario) {
  const std::string text = to_json(scenario).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("scenario_digest: SHA-256 failed");
  }
  std::ostringstream out;
  out << "sha256:";
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string chain_curve_name(int point, int step) {
  const std::string i = std::to_string(point);
  if (step == 1) return "G" + i;
  if (step == 2) return "H" + i;
  return "X" + i + "_" + std::to_string(step);
}

Scenario construction_scenario(int p, int points) {
  if (p < 2) throw DomainError("construction_scenario: p must be at least 2");
  if (points < 1) throw DomainError("construction_scenario: need at least one point");
  Scenario s;
  s.name = "frobenius-p" + std::to_string(p) + "-n" + std::to_string(points);
  s.base = BaseSurface::Quadric;
  s.curves.push_back({"C", {1, p}});
  for (int i = 1; i <= points; ++i) s.curves.push_back({"F" + std::to_string(i), {1, 0}});

  for (int i = 1; i <= points; ++i) {
    const std::string fibre = "F" + std::to_string(i);
    std::string previous;
    for (int step = 1; step <= p; ++step) {
      BlowupSpec b;
      b.exceptional = step == p ? "E" + std::to_string(i) : chain_curve_name(i, step);
      b.incident = {{"C", 1}, {fibre, 1}};
      if (!previous.empty()) b.incident.push_back({previous, 1});
      previous = b.exceptional;
      s.blowups.push_back(std::move(b));
    }
  }

  s.contraction.push_back("C");
  for (int i = 1; i <= points; ++i) s.contraction.push_back("F" + std::to_string(i));
  for (int step = 1; step < p; ++step)
    for (int i = 1; i <= points; ++i) s.contraction.push_back(chain_curve_name(i, step));
  return s;
}

namespace {

// Intersection numbers among C, F_i, G_i, H_i, E_i after the three blow-ups
// over each point.
Rational expected_pairing(const std::string& a, const std::string& b) {
  auto kind = [](const std::string& n) { return n.substr(0, 1); };
  auto point = [](const std::string& n) { return n.size() > 1 ? n.substr(1) : std::string(); };
  if (a == b) {
    const std::string k = kind(a);
    if (k == "H" || k == "G") return -2;
    if (k == "F" || k == "C") return -3;
    return -1;  // E
  }
  std::string ka = kind(a);
  std::string kb = kind(b);
  std::string x = a;
  std::string y = b;
  if (ka > kb) {
    std::swap(ka, kb);
    std::swap(x, y);
  }
  if (ka == "C" && kb == "E") return 1;
  if (point(x) != point(y)) return 0;
  if (ka == "E" && (kb == "F" || kb == "H")) return 1;
  if (ka == "G" && kb == "H") return 1;
  return 0;
}

Json rational_map(const std::vector<std::pair<std::string, Rational>>& values) {
  Json out = Json::object();
  for (const auto& [k, v] : values) out[k] = to_string(v);
  return out;
}

}  // namespace

Scenario keel_mckernan_scenario() {
  Scenario s = construction_scenario(3, 3);
  s.name = "keel-mckernan-p3";
  const auto third = make_rational(1, 3);
  const auto two_thirds = make_rational(2, 3);
  const std::vector<std::string> points = {"1", "2", "3"};

  s.divisors.push_back({"A", {{{"E2", 1}, {"E3", 1}, {"E1", -1}}, 0, {}}});
  s.divisors.push_back({"K_T", {{}, 1, {}}});
  s.divisors.push_back({"minus_K_T", {{}, -1, {}}});
  s.divisors.push_back({"E1", {{{"E1", 1}}, 0, {}}});
  DivisorExpr exceptional;
  for (const auto& i : points) {
    exceptional.terms.emplace_back("G" + i, 1);
    exceptional.terms.emplace_back("H" + i, 2);
    exceptional.terms.emplace_back("E" + i, 3);
  }
  s.divisors.push_back({"antik_exceptional_part", exceptional});

  // Intersection table over all 13 curves.
  std::vector<std::string> curves = {"C", "F1", "F2", "F3"};
  for (const auto& i : points) {
    curves.push_back("G" + i);
    curves.push_back("H" + i);
    curves.push_back("E" + i);
  }
  Json pairs = Json::array();
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i; j < curves.size(); ++j)
      pairs.push_back(Json{{"a", curves[i]}, {"b", curves[j]}, {"expect", to_string(expected_pairing(curves[i], curves[j]))}});
  s.checks.push_back({"intersection-table", "intersection_table", Json{{"pairs", pairs}}});

  DivisorExpr canonical_pullback{{}, 1, {}};
  for (const auto& i : points) canonical_pullback.terms.emplace_back("F" + i, third);
  canonical_pullback.terms.emplace_back("C", third);
  s.checks.push_back({"canonical-pullback", "pullback",
                      Json{{"divisor", "K_T"}, {"expect", to_json(canonical_pullback)}}});

  std::vector<std::pair<std::string, Rational>> discrepancies = {{"C", -third}};
  for (const auto& i : points) discrepancies.emplace_back("F" + i, -third);
  for (const auto& i : points) discrepancies.emplace_back("G" + i, 0);
  for (const auto& i : points) discrepancies.emplace_back("H" + i, 0);
  s.checks.push_back({"discrepancies", "discrepancies",
                      Json{{"expect", rational_map(discrepancies)},
                           {"minimum", to_string(Rational(-third))},
                           {"classification", "klt"}}});

  s.checks.push_back({"picard-rank", "target_rank", Json{{"expect", 1}}});
  s.checks.push_back({"degree-minus-K", "degree", Json{{"divisor", "minus_K_T"}, {"expect", "1"}, {"ample", true}}});
  s.checks.push_back({"degree-E1", "degree", Json{{"divisor", "E1"}, {"expect", "1"}}});
  s.checks.push_back({"degree-A", "degree", Json{{"divisor", "A"}, {"expect", "1"}, {"ample", true}}});
  s.checks.push_back({"minus-K-equiv-E1", "proportional",
                      Json{{"divisor", "minus_K_T"}, {"reference", "E1"}, {"expect", "1"}}});
  s.checks.push_back({"K-proportional-A", "proportional",
                      Json{{"divisor", "K_T"}, {"reference", "A"}, {"expect", "-1"}}});

  s.checks.push_back({"singular-points", "singularities",
                      Json{{"expect", Json{{"1/3(1,2)", 3}, {"1/3(1,1)", 4}}}, {"total", 7}}});
  s.checks.push_back({"class-group", "class_group",
                      Json{{"expect", Json{{"rank", 1}, {"torsion", Json::array({3, 3, 3})}}}}});

  s.checks.push_back({"anticanonical-sections", "h0_anticanonical",
                      Json{{"exceptional_part", "antik_exceptional_part"},
                           {"expect_base_class", Json::array({-2, -1})},
                           {"expect_h0", 0}}});

  DivisorExpr expansion;  // -psi^* A
  expansion.terms = {{"E1", 1},           {"F1", third},  {"H1", two_thirds}, {"G1", third},
                     {"E2", -1},          {"F2", -third}, {"H2", -two_thirds}, {"G2", -third},
                     {"E3", -1},          {"F3", -third}, {"H3", -two_thirds}, {"G3", -third},
                     {"C", -third}};
  DivisorExpr floor;
  floor.terms = {{"E1", 1},  {"E2", -1}, {"F2", -1}, {"H2", -1}, {"G2", -1},
                 {"E3", -1}, {"F3", -1}, {"H3", -1}, {"G3", -1}, {"C", -1}};
  const std::vector<std::pair<std::string, Rational>> nef = {
      {"C", 2},  {"F1", 1}, {"H1", 1}, {"G1", 0}, {"F2", 2},
      {"H2", 0}, {"G2", 1}, {"F3", 2}, {"H3", 0}, {"G3", 1}};
  s.checks.push_back({"kvv-failure", "kvv_failure",
                      Json{{"divisor", "A"},
                           {"expect", Json{{"expansion", to_json(expansion)},
                                           {"floor", to_json(floor)},
                                           {"nef_degrees", rational_map(nef)},
                                           {"k_dot_floor", "-2"},
                                           {"floor_squared", "-6"},
                                           {"euler_characteristic", "-1"},
                                           {"h1_nonzero", true},
                                           {"not_globally_f_split", true},
                                           {"no_w2_liftable_log_resolution", true}}}}});

  s.checks.push_back({"cone", "cone",
                      Json{{"divisor", "A"},
                           {"summand", -1},
                           {"expect", Json{{"r", "-1"},
                                           {"section_discrepancy", "0"},
                                           {"q_factorial", true},
                                           {"cm", false},
                                           {"class_group", Json{{"rank", 0}, {"torsion", Json::array({3, 3, 3})}}}}}}});

  Json cases = Json::array();
  cases.push_back(Json{{"p", 5}, {"multiple", 1}, {"expect", "contradiction"}});
  cases.push_back(Json{{"p", 7}, {"multiple", 1}, {"expect", "contradiction"}});
  cases.push_back(Json{{"p", 3}, {"multiple", 1}, {"expect", "no_contradiction"}});
  cases.push_back(Json{{"p", 3}, {"multiple", 2}, {"expect", "contradiction"}});
  cases.push_back(Json{{"p", 2}, {"multiple", 2}, {"expect", "no_contradiction"}});
  cases.push_back(Json{{"p", 2}, {"multiple", 4}, {"expect", "contradiction"}});
  s.checks.push_back({"bend-and-break", "bend_and_break", Json{{"cases", cases}}});
  return s;
}

}  // namespace kvv
