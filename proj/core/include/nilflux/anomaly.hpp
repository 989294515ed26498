#ifndef NILFLUX_ANOMALY_HPP
#define NILFLUX_ANOMALY_HPP

#include <span>
#include <string>
#include <vector>

#include "nilflux/connections.hpp"

namespace nilflux {

/// First Pontrjagin representative in raw normalization:
/// raw = sum_{i<j} Ω^i_j ∧ Ω^i_j = 8π² p₁.  Storing the raw form keeps the
/// whole scalar ring rational; π² never appears.
struct PontrjaginForm {
  KForm raw;
};

/// Computes the raw Pontrjagin form and asserts its closedness.
PontrjaginForm pontrjagin_raw(const Curvature& curvature, const StructureEquations& eqs);

/// SU(3)-instanton test on a list of curvature 2-forms: each form must be
/// J-invariant, Ω(JX, JY) = Ω(X, Y), with vanishing trace
/// sum_k Ω(E_k, JE_k) = 0.
bool instanton_check_forms(std::span<const KForm> forms, const HermitianStructure& h);
bool instanton_check(const Curvature& curvature, const HermitianStructure& h);

enum class InstantonKind { tangent_connection, abelian_cardoso, family_h19 };

/// A gauge bundle with instanton connection.  Tangent-bundle and h19-family
/// instantons carry full connection/curvature data; the abelian configuration
/// is specified only through its invariants: the trace 4-form
/// Tr F∧F = -2 e^1234, the anti-self-dual representatives spanning it, and
/// the pointwise square reconstructed from them.
struct InstantonBundle {
  InstantonKind kind = InstantonKind::abelian_cardoso;
  std::string label;
  Connection connection;               // gauge connection (unused for abelian)
  Curvature curvature;                 // endomorphism-valued curvature (unused for abelian)
  std::vector<KForm> curvature_forms;  // representatives for the instanton test
  KForm p1raw;
  /// (F^A)_{im ab}(F^A)_{jm ab} with gauge pairs a<b single-counted.
  std::array<std::array<Scalar, kDim>, kDim> quadratic;
  bool pointwise_reconstructed = false;

  InstantonBundle();
};

/// Instanton given by a metric connection on the tangent bundle (e.g. the
/// ∇+ of another member of a family of structures on the same coframe).
InstantonBundle tangent_instanton(const Connection& connection, const StructureEquations& eqs, std::string label);

/// The abelian instanton configuration: curvature
/// u1(e12-e34) + u2(e13+e24) + u3(e14-e23) with u1²+u2²+u3² = 1; only the
/// profile-independent data enters (trace -2 e^1234, unit pointwise square on
/// the base block).
InstantonBundle abelian_cardoso();

/// The two-parameter family of SU(3)-instantons on h19minus: connection
/// forms σ^2_3 = σ^2_5 = σ^4_5 = -(λ e^1 + μ e^6), all other σ^i_j (i<j)
/// equal to λ e^1 + μ e^6.  The raw Pontrjagin form is asserted to be
/// -120 μ² e^1234.
InstantonBundle instanton_family_h19(const Scalar& lambda, const Scalar& mu);

/// Solves dT = (α'/4)(raw_nabla - raw_A) for the scalar α'.  Reports
/// "unconstrained" when both sides vanish, "no solution" when the right side
/// vanishes or is not proportional to dT, and otherwise the exact α' (as a
/// rational, a Laurent monomial, or a polynomial quotient) together with its
/// sign when the sign is parameter-independent.
VerificationReport solve_alpha_prime(const KForm& dT, const KForm& raw_nabla, const KForm& raw_A);

/// The identities printed as theorems, remarks and equations, verified in
/// cleared-denominator raw form over the Laurent polynomial ring.
enum class TheoremId {
  E4_2,   // the four Pontrjagin values on iwasawa
  T4_3,   // dT + 2t²(raw(∇+) - raw(A)) = 0 on iwasawa
  T5_1a,  // (3t⁴-8tp⁴) dT - t²(raw(∇g_t) - raw(∇+_tp)) = 0 on h3
  T5_1b,  // (t⁴-tp⁴) dT - (t²/8)(raw(∇+_t) - raw(∇+_tp)) = 0 on h3
  T5_2a,  // (12t⁴-1) dT - 4t²(raw(∇g) - raw(A)) = 0 on h3
  T5_2b,  // (32t⁴-1) dT - 4t²(raw(∇+) - raw(A)) = 0 on h3
  T6_1g,  // (t⁴(b⁴+4b²+11)-1) dT - 2t²(b²+3)(raw(∇g) - raw(A)) = 0
  T6_1p,  // (4t⁴(b⁴+5b²+10)-1) dT - 2t²(b²+3)(raw(∇+) - raw(A)) = 0
  T7_1,   // (8t⁴-1) dT - 4t²(raw(∇+) - raw(A)) = 0 on h6
  T8_2i,  // 2 dT - (raw(∇+) - raw(A_{λ,μ})) = 0 modulo 15μ² = 4 on h19minus
  T8_2ii, // 2 dT - raw(∇c) = 0 on h19minus, with raw(A_{λ,0}) = 0
  L8_1,   // curvature and raw Pontrjagin form of the family A_{λ,μ}
  R5_3,   // raw(∇-) = raw(∇c) = 0 on h3
  R6_2,   // raw(∇-) = 8t⁴(b²+3) e1234, raw(∇c) = 0 on h2h4h5
  R7_2,   // raw(∇g) = 0, raw(∇-) = 16t⁴ e1234, raw(∇c) = 0 on h6
};

std::string theorem_name(TheoremId id);
std::vector<TheoremId> all_theorems();
/// The theorem identities naturally attached to one preset.
std::vector<TheoremId> theorems_for_preset(std::string_view preset);

VerificationReport verify_theorem(TheoremId id);

}  // namespace nilflux

#endif  // NILFLUX_ANOMALY_HPP
