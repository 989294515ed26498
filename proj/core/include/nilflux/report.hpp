#ifndef NILFLUX_REPORT_HPP
#define NILFLUX_REPORT_HPP

#include <optional>
#include <string>

namespace nilflux {

/// Outcome of one named identity or predicate check.  `passed` is true
/// exactly when the residual vanished (or the predicate held); textual
/// details carry the residual summary, the solved alpha' and similar notes.
struct VerificationReport {
  std::string name;
  bool passed = false;
  int residual_terms = 0;
  std::optional<std::string> alpha_prime;
  /// Sign of alpha' when determined: +1, -1; 0 when undetermined.
  int alpha_sign = 0;
  std::string detail;

  /// Line record: name|status|residual_terms|alpha'.
  std::string record() const {
    std::string out = name;
    out += '|';
    out += passed ? "pass" : "fail";
    out += '|';
    out += std::to_string(residual_terms);
    out += '|';
    out += alpha_prime ? *alpha_prime : "-";
    return out;
  }

  static VerificationReport ok(std::string name, std::string detail = {}) {
    VerificationReport r;
    r.name = std::move(name);
    r.passed = true;
    r.detail = std::move(detail);
    return r;
  }
  static VerificationReport failure(std::string name, std::string detail, int residual_terms = 0) {
    VerificationReport r;
    r.name = std::move(name);
    r.passed = false;
    r.detail = std::move(detail);
    r.residual_terms = residual_terms;
    return r;
  }
};

}  // namespace nilflux

#endif  // NILFLUX_REPORT_HPP
