#pragma once

// Scenario files: a base surface, declared curves, an ordered blow-up
// sequence, a contraction, named divisors and a list of checks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kvv/contraction.hpp"
#include "kvv/surface_model.hpp"

namespace kvv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kScenarioSchema = "kvv-scenario/1";

/// Invalid scenario input. The message carries the JSON location.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

struct CurveSpec {
  std::string name;
  IntVector class_vector;
  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

struct BlowupSpec {
  std::string exceptional;
  std::vector<SurfaceModel::Incidence> incident;
  friend bool operator==(const BlowupSpec&, const BlowupSpec&) = default;
};

/// Σ terms + canonical·K_S + residual.
struct DivisorExpr {
  std::vector<std::pair<std::string, Rational>> terms;
  Integer canonical = 0;
  IntVector residual;
  friend bool operator==(const DivisorExpr&, const DivisorExpr&) = default;
};

struct DivisorSpec {
  std::string name;
  DivisorExpr expr;
  friend bool operator==(const DivisorSpec&, const DivisorSpec&) = default;
};

struct CheckSpec {
  std::string id;
  std::string type;
  Json params;  // everything except "id" and "type"
  friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

struct Scenario {
  std::string name;
  BaseSurface base = BaseSurface::Quadric;
  std::vector<CurveSpec> curves;
  std::vector<BlowupSpec> blowups;
  std::vector<std::string> contraction;
  std::vector<DivisorSpec> divisors;
  std::vector<CheckSpec> checks;

  const DivisorSpec* find_divisor(const std::string& name) const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The scenario realized as lattice objects.
struct BuiltScenario {
  SurfaceModel model;
  Contraction contraction;
  std::map<std::string, QDivisor> divisors;

  const QDivisor& divisor(const std::string& name) const;
};

const std::vector<std::string>& known_check_types();

Scenario parse_scenario(const Json& doc);
Json to_json(const Scenario& scenario);
Json to_json(const DivisorExpr& expr);
DivisorExpr parse_divisor_expr(const Json& node, const std::string& where);

/// Reads, parses and validates (builds) a scenario; every failure is a
/// ScenarioError naming the offending location.
Scenario load_scenario(const std::string& path);

/// Throws ScenarioError for unknown names, incidence violations and
/// non-contractible configurations.
BuiltScenario build(const Scenario& scenario);

QDivisor to_qdivisor(const SurfaceModel& model, const DivisorExpr& expr);
/// Terms in registry order, zero canonical multiple, residual as stored.
DivisorExpr to_divisor_expr(const SurfaceModel& model, const QDivisor& d);

/// "sha256:<hex>" of the compact serialization.
std::string scenario_digest(const Scenario& scenario);

/// Names of the curves in the generalized construction: the chain curves
/// over point i are G_i, H_i, then X_i_j for j >= 3; the last blow-up is E_i.
std::string chain_curve_name(int point, int step);

/// C of class f_x + p f_y, `points` fibres, and over each point p successive
/// blow-ups at the intersection of the strict transforms of C and the fibre.
/// No divisors or checks.
Scenario construction_scenario(int p, int points);

/// The characteristic-three surface with its full expectation block.
Scenario keel_mckernan_scenario();

}  // namespace kvv
