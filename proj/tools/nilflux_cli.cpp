// nilflux — exact verification of torsion geometries on 6-dimensional
// nilmanifold frames: structure equations in, connections, curvature,
// Pontrjagin forms and anomaly checks out.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nilflux/paper_suite.hpp"
#include "nilflux/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

bool color_enabled() {
  const char* env = std::getenv("NILFLUX_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(fileno(stdout)) != 0;
}

struct Style {
  bool color = color_enabled();
  std::string good(const std::string& s) const { return color ? "\033[32m" + s + "\033[0m" : s; }
  std::string bad(const std::string& s) const { return color ? "\033[31m" + s + "\033[0m" : s; }
};

void print_report_human(const nilflux::VerificationReport& report, const Style& style) {
  std::string tag = report.passed ? style.good("[ ok ]") : style.bad("[fail]");
  std::cout << tag << ' ' << report.name;
  if (!report.detail.empty()) std::cout << " — " << report.detail;
  std::cout << '\n';
}

int run_verify(const std::string& path, const std::string& format) {
  nilflux::Scenario scenario;
  try {
    if (path == "-") {
      scenario = nilflux::parse_scenario(std::cin);
    } else {
      std::ifstream file(path);
      if (!file) {
        std::cerr << "error: cannot open scenario file '" << path << "'\n";
        return kExitUsage;
      }
      scenario = nilflux::parse_scenario(file);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<nilflux::VerificationReport> reports;
  try {
    reports = nilflux::run_scenario(scenario);
  } catch (const nilflux::ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Style style;
  bool all_passed = true;
  for (const auto& report : reports) {
    all_passed = all_passed && report.passed;
    if (format == "records") {
      std::cout << report.record() << '\n';
    } else {
      print_report_human(report, style);
    }
  }
  return all_passed ? kExitOk : kExitVerificationFailure;
}

int run_reproduce(const std::string& only, const std::string& format) {
  std::vector<nilflux::SuiteCheck> checks = nilflux::run_paper_suite(only);
  if (checks.empty()) {
    std::cerr << "error: no checks match --only=" << only << '\n';
    return kExitUsage;
  }
  Style style;
  int unexpected = 0;
  for (const auto& check : checks) {
    if (!check.as_expected()) ++unexpected;
    if (format == "records") {
      std::cout << check.result.record() << '|' << (check.expected_pass ? "expect-pass" : "expect-fail") << '|'
                << (check.as_expected() ? "ok" : "UNEXPECTED") << '\n';
      continue;
    }
    std::string tag;
    if (check.as_expected()) {
      tag = style.good(check.expected_pass ? "[ ok ]" : "[xfail]");
    } else {
      tag = style.bad("[FAIL]");
    }
    std::cout << tag << ' ' << check.result.name;
    if (!check.expected_pass && check.as_expected()) std::cout << " (failure expected)";
    if (!check.result.detail.empty()) std::cout << " — " << check.result.detail;
    std::cout << '\n';
  }
  if (format != "records") {
    std::cout << checks.size() << " checks, " << (checks.size() - static_cast<size_t>(unexpected))
              << " as expected, " << unexpected << " unexpected\n";
  }
  return unexpected == 0 ? kExitOk : kExitVerificationFailure;
}

int run_p1(const std::string& preset, const std::string& connection,
           const std::vector<std::string>& param_bindings) {
  using namespace nilflux;
  try {
    PresetGeometry g = make_preset(preset);
    std::map<int, Rational> bindings;
    for (const std::string& binding : param_bindings) {
      auto eq = binding.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: --param expects name=p/q\n";
        return kExitUsage;
      }
      bindings[params::id(binding.substr(0, eq))] = parse_rational(binding.substr(eq + 1));
    }
    if (!bindings.empty()) g = g.bind(bindings);
    HermitianStructure h = g.hermitian();
    Connection c;
    if (connection == "lc") {
      c = levi_civita(g.eqs);
    } else if (connection == "plus") {
      c = torsion_connection(g.eqs, h, +1);
    } else if (connection == "minus") {
      c = torsion_connection(g.eqs, h, -1);
    } else if (connection == "chern") {
      c = chern(g.eqs, h);
    } else {
      std::cerr << "error: unknown connection '" << connection << "' (lc|plus|minus|chern)\n";
      return kExitUsage;
    }
    KForm raw = pontrjagin_raw(curvature(c, g.eqs), g.eqs).raw;
    std::cout << "p1_raw(" << connection << ") on " << preset << " = " << raw.str() << '\n';
    KForm scaled = raw * Scalar(Rational(1, 8));
    if (scaled.is_zero()) {
      std::cout << "p1(" << connection << ") = 0\n";
    } else {
      std::cout << "p1(" << connection << ") = (" << scaled.str() << ")/pi^2\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic verification for invariant torsion geometries on 6-dimensional frames"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string verify_format = "human";
  CLI::App* verify = app.add_subcommand("verify", "run the checks requested by a scenario file");
  verify->add_option("scenario", scenario_path, "scenario file ('-' for stdin)")->required();
  verify->add_option("--format", verify_format, "human|records")->check(CLI::IsMember({"human", "records"}));

  std::string only;
  std::string reproduce_format = "human";
  CLI::App* reproduce = app.add_subcommand("reproduce-paper", "run the full verification program");
  reproduce->add_option("--only", only, "restrict to checks whose preset name contains this string");
  reproduce->add_option("--format", reproduce_format, "human|records")
      ->check(CLI::IsMember({"human", "records"}));

  std::string preset;
  std::string connection;
  std::vector<std::string> param_bindings;
  CLI::App* p1 = app.add_subcommand("p1", "print the raw first Pontrjagin form of a preset connection");
  p1->add_option("--preset", preset, "preset name")->required();
  p1->add_option("--connection", connection, "lc|plus|minus|chern")->required();
  p1->add_option("--param", param_bindings, "parameter binding name=p/q (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(scenario_path, verify_format);
    if (reproduce->parsed()) return run_reproduce(only, reproduce_format);
    if (p1->parsed()) return run_p1(preset, connection, param_bindings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
