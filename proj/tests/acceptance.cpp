// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all checks are exact; runtime bounds are wall-clock) and prints one
// pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nilflux/paper_suite.hpp"
#include "nilflux/scenario.hpp"

using namespace nilflux;

namespace {

struct Criterion {
  std::string label;
  double limit_seconds;  // 0 = no bound
  std::function<bool(std::string&)> run;
};

int failures = 0;

void run_criterion(int number, const Criterion& criterion) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = criterion.run(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("runtime ") + std::to_string(seconds) + "s exceeds " +
              std::to_string(criterion.limit_seconds) + "s";
  }
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.3fs)%s%s\n", ok ? "PASS" : "FAIL", number, criterion.label.c_str(),
              seconds, detail.empty() ? "" : " — ", detail.c_str());
}

// Collects the paper-suite entries whose names match any of the given
// substrings; fails when none match or any is not as expected.
bool suite_subset(const std::vector<SuiteCheck>& suite, const std::vector<std::string>& needles,
                  std::string& detail) {
  size_t matched = 0;
  for (const SuiteCheck& check : suite) {
    bool hit = false;
    for (const std::string& needle : needles)
      if (check.result.name.find(needle) != std::string::npos) hit = true;
    if (!hit) continue;
    ++matched;
    if (!check.as_expected()) {
      detail = "unexpected result: " + check.result.name +
               (check.result.detail.empty() ? "" : " — " + check.result.detail);
      return false;
    }
  }
  if (matched == 0) {
    detail = "no checks matched";
    return false;
  }
  detail = std::to_string(matched) + " checks";
  return true;
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> denom(1, 4);
  std::uniform_int_distribution<int> exponent(-2, 3);
  std::uniform_int_distribution<int> term_count(0, 3);
  Scalar out;
  int n = term_count(rng);
  for (int i = 0; i < n; ++i) {
    Scalar term(Rational(coeff(rng), denom(rng)));
    term = term * Scalar::param("t", exponent(rng));
    term = term * Scalar::param("b", exponent(rng));
    out += term;
  }
  return out;
}

}  // namespace

int main() {
  std::vector<SuiteCheck> suite = run_paper_suite();

  std::vector<Criterion> criteria;

  criteria.push_back({"golden curvature tables (every printed table, zero tolerance)", 1.0,
                      [&suite](std::string& detail) {
                        return suite_subset(suite, {"curvature table"}, detail);
                      }});

  criteria.push_back({"golden raw Pontrjagin values (x 8 pi^2, zero tolerance)", 0.0,
                      [&suite](std::string& detail) {
                        return suite_subset(suite, {"raw p1", "E4.2", "L8.1"}, detail);
                      }});

  criteria.push_back({"fifteen theorem identities as exact Laurent-polynomial zeros", 5.0,
                      [](std::string& detail) {
                        for (TheoremId id : all_theorems()) {
                          VerificationReport report = verify_theorem(id);
                          if (!report.passed || report.residual_terms != 0) {
                            detail = report.name + ": " + report.detail;
                            return false;
                          }
                        }
                        detail = "15 identities";
                        return true;
                      }});

  criteria.push_back({"negative results (invalid alpha', D=+1 not balanced, Chern channel blocked)", 0.0,
                      [&suite](std::string& detail) {
                        bool ok = suite_subset(suite, {"alpha' validity", "D=+1"}, detail);
                        if (!ok) return false;
                        // Eq (4.3): the solved alpha' is exactly -8t^2
                        PresetGeometry g = make_preset("iwasawa");
                        HermitianStructure h = g.hermitian();
                        KForm dT = g.eqs.d(torsion_3form(h));
                        KForm raw = pontrjagin_raw(curvature(torsion_connection(g.eqs, h, +1), g.eqs), g.eqs).raw;
                        VerificationReport r = solve_alpha_prime(dT, raw, abelian_cardoso().p1raw);
                        if (r.alpha_prime != "-8*t^2" || r.alpha_sign != -1) {
                          detail = "Eq (4.3) alpha' mismatch: " + (r.alpha_prime ? *r.alpha_prime : "-");
                          return false;
                        }
                        return true;
                      }});

  criteria.push_back({"structural identities (2.2)-(2.5), nabla+T=0, dT (2,2), holonomy (2.6)", 0.0,
                      [&suite](std::string& detail) {
                        return suite_subset(suite,
                                            {"(2.2)", "(2.3)", "(2.4)", "(2.5)", "dT is (2,2)", "nabla+ T = 0",
                                             "holonomy condition"},
                                            detail);
                      }});

  criteria.push_back({"equations of motion (Theorems 5.1b, 5.2b pass; Levi-Civita term fails)", 10.0,
                      [&suite](std::string& detail) {
                        return suite_subset(suite, {"EOM"}, detail);
                      }});

  criteria.push_back({"Theorem 1.1 consistency (identity (1.5) for instantons, (1.5)<=>(1.6) on (1,1) terms)", 0.0,
                      [&suite](std::string& detail) {
                        return suite_subset(suite, {"(1.5)", "Chern curvature is (1,1)", "SU(3)-instanton"},
                                            detail);
                      }});

  criteria.push_back({"algebra property suite (d^2=0, star involution, anticommutativity, ring laws)", 0.0,
                      [](std::string& detail) {
                        // d^2 = 0 on all 64 monomials of every preset
                        for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
                          StructureEquations eqs = make_preset(name).eqs;
                          for (uint8_t mask = 0; mask < 64; ++mask) {
                            if (!eqs.d(eqs.d(KForm::basis(MultiIndex::from_mask(mask)))).is_zero()) {
                              detail = std::string("d^2 != 0 on ") + name;
                              return false;
                            }
                          }
                        }
                        // star involution signs on all basis forms
                        for (uint8_t mask = 0; mask < 64; ++mask) {
                          MultiIndex idx = MultiIndex::from_mask(mask);
                          KForm basis = KForm::basis(idx);
                          int k = idx.degree();
                          KForm expected = (k * (kDim - k)) % 2 == 0 ? basis : -basis;
                          if (hodge_star(hodge_star(basis)) != expected) {
                            detail = "star involution failed";
                            return false;
                          }
                        }
                        // graded anticommutativity on random forms
                        std::mt19937 rng(424242);
                        std::uniform_int_distribution<int> coeff(-4, 4);
                        std::uniform_int_distribution<int> degree(0, 4);
                        auto random_form = [&](int deg) {
                          KForm out = KForm::zero(deg);
                          for (uint8_t mask = 0; mask < 64; ++mask) {
                            MultiIndex idx = MultiIndex::from_mask(mask);
                            if (idx.degree() != deg) continue;
                            int c = coeff(rng);
                            if (c != 0) out += KForm::monomial(Scalar(c), idx);
                          }
                          return out;
                        };
                        for (int iter = 0; iter < 100; ++iter) {
                          int p = degree(rng), q = degree(rng);
                          KForm a = random_form(p);
                          KForm b = random_form(q);
                          KForm ba = wedge(b, a);
                          if ((p * q) % 2 == 1) ba = -ba;
                          if (wedge(a, b) != ba) {
                            detail = "graded anticommutativity failed";
                            return false;
                          }
                        }
                        // ring laws, >= 1000 randomized cases
                        for (int iter = 0; iter < 1000; ++iter) {
                          Scalar a = random_scalar(rng);
                          Scalar b = random_scalar(rng);
                          Scalar c = random_scalar(rng);
                          bool ok = (a + b) == (b + a) && (a * b) == (b * a) &&
                                    ((a + b) + c) == (a + (b + c)) && ((a * b) * c) == (a * (b * c)) &&
                                    (a * (b + c)) == (a * b + a * c);
                          if (!ok) {
                            detail = "ring law failed";
                            return false;
                          }
                        }
                        detail = "64 monomials x 6 presets, 64 star signs, 100 + 1000 randomized cases";
                        return true;
                      }});

  int number = 1;
  for (const Criterion& criterion : criteria) run_criterion(number++, criterion);

  if (failures == 0) {
    std::printf("acceptance: all %zu criteria pass\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
