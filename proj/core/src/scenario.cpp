#include "nilflux/scenario.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace nilflux {

namespace {

std::string trim(std::string s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(value);
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ConnectionKind parse_connection(const std::string& name) {
  if (name == "lc" || name == "levi-civita" || name == "levi_civita") return ConnectionKind::levi_civita;
  if (name == "plus") return ConnectionKind::plus;
  if (name == "minus") return ConnectionKind::minus;
  if (name == "chern") return ConnectionKind::chern;
  throw ScenarioError("unknown connection kind: " + name);
}

}  // namespace

Scenario parse_scenario(std::istream& input) {
  Scenario scenario;
  std::string line;
  int line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError("line " + std::to_string(line_number) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "preset") {
      scenario.preset = value;
    } else if (key == "structure") {
      scenario.structure = value;
    } else if (key == "param") {
      auto inner = value.find('=');
      if (inner == std::string::npos)
        throw ScenarioError("line " + std::to_string(line_number) + ": param expects name=p/q");
      std::string name = trim(value.substr(0, inner));
      try {
        scenario.params[name] = parse_rational(trim(value.substr(inner + 1)));
      } catch (const std::invalid_argument& e) {
        throw ScenarioError("line " + std::to_string(line_number) + ": " + e.what());
      }
    } else if (key == "connection") {
      for (const std::string& item : split_list(value)) scenario.connections.push_back(parse_connection(item));
    } else if (key == "instanton") {
      scenario.instanton = value;
    } else if (key == "checks") {
      for (const std::string& item : split_list(value)) scenario.checks.push_back(item);
    } else {
      throw ScenarioError("line " + std::to_string(line_number) + ": unknown key '" + key + "'");
    }
  }
  if (!scenario.preset && !scenario.structure) throw ScenarioError("scenario needs a preset or structure entry");
  if (scenario.checks.empty()) throw ScenarioError("scenario requests no checks");
  return scenario;
}

Scenario parse_scenario_text(const std::string& text) {
  std::istringstream stream(text);
  return parse_scenario(stream);
}

namespace {

struct ScenarioContext {
  PresetGeometry geometry;
  std::map<int, Rational> bindings;

  HermitianStructure hermitian() const { return geometry.hermitian(); }
};

ScenarioContext build_context(const Scenario& scenario) {
  ScenarioContext ctx{PresetGeometry{"", StructureEquations(), AlmostComplexStructure::standard(), KForm::zero(2)},
                      {}};
  if (scenario.preset) {
    ctx.geometry = make_preset(*scenario.preset);
  } else {
    StructureEquations eqs;
    try {
      eqs = StructureEquations::parse(*scenario.structure);
    } catch (const StructureParseError& e) {
      throw ScenarioError(std::string("structure notation: ") + e.what());
    }
    if (!eqs.jacobi_ok()) throw ScenarioError("structure equations violate the Jacobi identity");
    AlmostComplexStructure J = AlmostComplexStructure::standard();
    ctx.geometry = PresetGeometry{"custom", std::move(eqs), J, kaehler_form(J)};
  }
  for (const auto& [name, value] : scenario.params) ctx.bindings[params::id(name)] = value;
  if (!ctx.bindings.empty()) ctx.geometry = ctx.geometry.bind(ctx.bindings);
  return ctx;
}

InstantonBundle build_instanton(const Scenario& scenario, const ScenarioContext& ctx) {
  if (!scenario.instanton) throw ScenarioError("this check needs an instanton entry");
  const std::string& kind = *scenario.instanton;
  if (kind == "abelian") return abelian_cardoso();
  if (kind == "tangent") {
    // the ∇+ connection of the same geometry, with the alternate fiber scale
    // tp when bound (the two-parameter family on h3)
    PresetGeometry g = ctx.geometry;
    if (scenario.preset && *scenario.preset == "h3" && scenario.params.count("tp")) {
      g = make_h3(Scalar(scenario.params.at("tp")));
    }
    HermitianStructure h = g.hermitian();
    return tangent_instanton(torsion_connection(g.eqs, h, +1), g.eqs, "nabla+");
  }
  if (kind == "h19family") {
    Scalar lambda = scenario.params.count("lambda") ? Scalar(scenario.params.at("lambda")) : Scalar::param("lambda");
    Scalar mu = scenario.params.count("mu") ? Scalar(scenario.params.at("mu")) : Scalar::param("mu");
    return instanton_family_h19(lambda, mu);
  }
  throw ScenarioError("unknown instanton kind: " + kind);
}

}  // namespace

std::vector<VerificationReport> run_scenario(const Scenario& scenario) {
  std::vector<VerificationReport> reports;
  ScenarioContext ctx = build_context(scenario);

  // Torsion-dependent checks presuppose a balanced structure (the two
  // torsion formulas agree exactly there).
  auto require_balanced = [&ctx](const std::string& check) {
    std::string reason;
    if (!balanced_check(ctx.hermitian(), &reason))
      throw ScenarioError(check + " check needs a balanced structure: " + reason);
  };

  for (const std::string& check : scenario.checks) {
    if (check == "balanced") {
      HermitianStructure h = ctx.hermitian();
      std::string reason;
      bool ok = balanced_check(h, &reason);
      VerificationReport r;
      r.name = ctx.geometry.name + ": balanced";
      r.passed = ok;
      r.detail = ok ? "N = 0 and d*F = 0" : reason;
      reports.push_back(std::move(r));
    } else if (check == "holonomy") {
      require_balanced(check);
      HermitianStructure h = ctx.hermitian();
      Curvature curv = curvature(torsion_connection(ctx.geometry.eqs, h, +1), ctx.geometry.eqs);
      KForm trace = holonomy_trace(curv, ctx.geometry.J);
      VerificationReport r;
      r.name = ctx.geometry.name + ": holonomy condition (2.6)";
      r.passed = trace.is_zero();
      if (!r.passed) {
        r.detail = "trace 2-form = " + trace.str();
        for (const auto& [idx, c] : trace.terms()) {
          (void)idx;
          r.residual_terms += static_cast<int>(c.terms().size());
        }
      }
      reports.push_back(std::move(r));
    } else if (check == "instanton") {
      InstantonBundle bundle = build_instanton(scenario, ctx);
      HermitianStructure h = ctx.hermitian();
      VerificationReport r;
      r.name = ctx.geometry.name + ": SU(3)-instanton (" + bundle.label + ")";
      r.passed = instanton_check_forms(bundle.curvature_forms, h);
      if (!r.passed) r.detail = "curvature fails J-invariance or the trace condition";
      reports.push_back(std::move(r));
    } else if (check == "anomaly") {
      if (scenario.connections.empty()) throw ScenarioError("anomaly check needs a connection entry");
      require_balanced(check);
      InstantonBundle bundle = build_instanton(scenario, ctx);
      HermitianStructure h = ctx.hermitian();
      KForm dT = ctx.geometry.eqs.d(torsion_3form(h));
      for (ConnectionKind kind : scenario.connections) {
        Connection c;
        switch (kind) {
          case ConnectionKind::levi_civita: c = levi_civita(ctx.geometry.eqs); break;
          case ConnectionKind::plus: c = torsion_connection(ctx.geometry.eqs, h, +1); break;
          case ConnectionKind::minus: c = torsion_connection(ctx.geometry.eqs, h, -1); break;
          case ConnectionKind::chern: c = chern(ctx.geometry.eqs, h); break;
          case ConnectionKind::custom: continue;
        }
        KForm raw = pontrjagin_raw(curvature(c, ctx.geometry.eqs), ctx.geometry.eqs).raw;
        VerificationReport r = solve_alpha_prime(dT, raw, bundle.p1raw);
        r.name = ctx.geometry.name + ": anomaly (" + connection_kind_name(kind) + ", " + bundle.label + ")";
        reports.push_back(std::move(r));
      }
    } else if (check == "theorems") {
      if (!scenario.preset) throw ScenarioError("theorem checks need a preset");
      std::vector<TheoremId> ids = theorems_for_preset(*scenario.preset);
      if (ids.empty()) throw ScenarioError("no theorem identities attached to preset " + *scenario.preset);
      for (TheoremId id : ids) reports.push_back(verify_theorem(id));
    } else if (check == "structural") {
      for (VerificationReport& r : structural_identities(ctx.geometry)) reports.push_back(std::move(r));
    } else if (check == "eom") {
      if (scenario.connections.empty()) throw ScenarioError("eom check needs a connection entry");
      require_balanced(check);
      // fully bound rational configuration required
      for (int k = 1; k <= kDim; ++k)
        for (const auto& [idx, c] : ctx.geometry.eqs.de(k).terms()) {
          (void)idx;
          if (!c.is_constant())
            throw ScenarioError("eom check needs all parameters bound to rational values (sign evaluation)");
        }
      InstantonBundle bundle = build_instanton(scenario, ctx);
      HermitianStructure h = ctx.hermitian();
      KForm dT = ctx.geometry.eqs.d(torsion_3form(h));
      ConnectionKind kind = scenario.connections.front();
      Connection r_conn;
      switch (kind) {
        case ConnectionKind::levi_civita: r_conn = levi_civita(ctx.geometry.eqs); break;
        case ConnectionKind::plus: r_conn = torsion_connection(ctx.geometry.eqs, h, +1); break;
        case ConnectionKind::minus: r_conn = torsion_connection(ctx.geometry.eqs, h, -1); break;
        case ConnectionKind::chern: r_conn = chern(ctx.geometry.eqs, h); break;
        case ConnectionKind::custom: throw ScenarioError("eom needs a named connection");
      }
      KForm raw = pontrjagin_raw(curvature(r_conn, ctx.geometry.eqs), ctx.geometry.eqs).raw;
      VerificationReport alpha_report = solve_alpha_prime(dT, raw, bundle.p1raw);
      if (!alpha_report.passed || !alpha_report.alpha_prime)
        throw ScenarioError("eom: anomaly has no alpha' solution (" + alpha_report.detail + ")");
      Rational alpha;
      try {
        alpha = parse_rational(*alpha_report.alpha_prime);
      } catch (const std::invalid_argument&) {
        throw ScenarioError("eom: alpha' is not rational at the bound parameters: " + *alpha_report.alpha_prime);
      }
      MotionConfiguration cfg = MotionConfiguration::make(
          ctx.geometry.name + ": equations of motion (" + connection_kind_name(kind) + ", " + bundle.label + ")",
          ctx.geometry, bundle, r_conn, alpha);
      reports.push_back(equations_of_motion_check(cfg));
    } else {
      throw ScenarioError("unknown check: " + check);
    }
  }
  return reports;
}

}  // namespace nilflux
