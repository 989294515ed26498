#ifndef NILFLUX_PAPER_SUITE_HPP
#define NILFLUX_PAPER_SUITE_HPP

#include <string>
#include <vector>

#include "nilflux/eom.hpp"

namespace nilflux {

/// One entry of the full verification program: a named check, the preset it
/// belongs to, and whether it is expected to pass (negative results are
/// expected to fail).
struct SuiteCheck {
  std::string preset;
  bool expected_pass = true;
  VerificationReport result;

  bool as_expected() const { return result.passed == expected_pass; }
};

/// Runs the complete verification program: golden structure equations,
/// torsion and curvature tables, Pontrjagin values, the fifteen theorem
/// identities, the negative results, the structural identities on every
/// preset, and the equations-of-motion configurations.  `only` filters by
/// preset-name substring.
std::vector<SuiteCheck> run_paper_suite(const std::string& only = "");

/// All entries as expected?
bool suite_ok(const std::vector<SuiteCheck>& checks);

}  // namespace nilflux

#endif  // NILFLUX_PAPER_SUITE_HPP
