#ifndef NILFLUX_EOM_HPP
#define NILFLUX_EOM_HPP

#include "nilflux/anomaly.hpp"

namespace nilflux {

/// True when R is a (1,1)-form: J^s_m J^p_n R_{sp ab} = R_{mn ab} for all
/// indices.
bool is_one_one_curvature(const CurvatureTensor4& R, const HermitianStructure& h);

/// The quadratic curvature identity
///   1/2 [R_{msab}R_{pqab} + R_{mpab}R_{qsab} + R_{mqab}R_{spab}] F^{pq} J^s_n
///     = R_{mpqr} R_n^{pqr}
/// for all m, n (full sums in the orthonormal frame).  Necessary and
/// sufficient for the gravitino equation of motion to follow from the
/// supersymmetry equations and the anomaly cancellation; automatic for
/// SU(3)-instanton curvature.
bool identity_15_check(const CurvatureTensor4& R, const HermitianStructure& h);

enum class Identity16Result { holds, fails, not_applicable };

/// R_{mjab} R_{klab} F^{kl} = 0 for all m, j; only applicable when R is a
/// (1,1)-form, in which case it is equivalent to identity (1.5).
Identity16Result identity_16_check(const CurvatureTensor4& R, const HermitianStructure& h);

/// One configuration of the string-frame equations of motion at constant
/// dilaton: geometry (bound to rational parameters), flux H = T, instanton
/// bundle, curvature term R and the exact rational alpha'.
struct MotionConfiguration {
  std::string label;
  PresetGeometry geometry;
  KForm H;
  InstantonBundle instanton;
  Connection r_connection;
  Curvature r_curvature;
  Rational alpha_prime = 0;

  static MotionConfiguration make(std::string label, PresetGeometry geometry, InstantonBundle instanton,
                                  Connection r_connection, Rational alpha_prime);
};

/// Checks the three equations exactly:
///  (i)  Ric^g_{ij} - 1/4 H_{imn}H_j^{mn}
///         - alpha'/4 [(F^A)_{imab}(F^A)_j^{mab} - R_{imnq}R_j^{mnq}] = 0
///       (gauge/endomorphism pairs single-counted, matching the raw
///        Pontrjagin normalization),
///  (ii) the Levi-Civita divergence of H vanishes,
///  (iii) the ∇+ gauge divergence of F^A vanishes (for the abelian bundle,
///        the connection part; the derivative part rests on the instanton
///        profile equations and is flagged in the report).
VerificationReport equations_of_motion_check(const MotionConfiguration& cfg);

}  // namespace nilflux

#endif  // NILFLUX_EOM_HPP
