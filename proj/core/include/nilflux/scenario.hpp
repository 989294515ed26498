#ifndef NILFLUX_SCENARIO_HPP
#define NILFLUX_SCENARIO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilflux/paper_suite.hpp"

namespace nilflux {

/// A declarative verification request: a geometry (preset name or inline
/// structure notation), optional parameter bindings, connection and instanton
/// selections, and the list of checks to run.
struct Scenario {
  std::optional<std::string> preset;
  std::optional<std::string> structure;  // inline notation, parsed with the standard J
  std::map<std::string, Rational> params;
  std::vector<ConnectionKind> connections;
  std::optional<std::string> instanton;  // abelian | tangent | h19family
  std::vector<std::string> checks;       // balanced, holonomy, instanton, anomaly, theorems, eom
};

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& message) : std::runtime_error(message) {}
};

/// Parses the line-oriented key=value scenario text ('#' comments).  Keys:
/// preset, structure, param (name=p/q, repeatable), connection (comma list of
/// lc|plus|minus|chern), instanton, checks (comma list).
Scenario parse_scenario(std::istream& input);
Scenario parse_scenario_text(const std::string& text);

/// Executes the requested checks in dependency order; deterministic report
/// ordering.  Throws ScenarioError on unknown presets, missing bindings for
/// sign-sensitive checks, and malformed requests.
std::vector<VerificationReport> run_scenario(const Scenario& scenario);

}  // namespace nilflux

#endif  // NILFLUX_SCENARIO_HPP
