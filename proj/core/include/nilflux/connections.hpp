#ifndef NILFLUX_CONNECTIONS_HPP
#define NILFLUX_CONNECTIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "nilflux/presets.hpp"
#include "nilflux/report.hpp"

namespace nilflux {

enum class ConnectionKind { levi_civita, plus, minus, chern, custom };

std::string connection_kind_name(ConnectionKind kind);

/// Connection 1-forms ω^i_j in the orthonormal frame,
/// ω^i_j(E_k) = g(∇_{E_k} E_j, E_i).  All four named kinds are metric:
/// ω^i_j = -ω^j_i.
struct Connection {
  ConnectionKind kind = ConnectionKind::custom;
  std::array<std::array<KForm, kDim>, kDim> omega;

  Connection();
  const KForm& form(int i, int j) const { return omega[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
  KForm& form(int i, int j) { return omega[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
  bool antisymmetric() const;
};

/// Curvature 2-forms Ω^i_j = dω^i_j + ω^i_k ∧ ω^k_j.
struct Curvature {
  std::array<std::array<KForm, kDim>, kDim> omega;

  Curvature();
  const KForm& form(int i, int j) const { return omega[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
  KForm& form(int i, int j) { return omega[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
  bool antisymmetric() const;
  bool is_zero() const;
};

/// 4-index curvature tensor R_{ijkl} = Ω^l_k(E_i, E_j) (orthonormal frame,
/// indices lowered trivially).
struct CurvatureTensor4 {
  std::array<Scalar, kDim * kDim * kDim * kDim> entries;

  static CurvatureTensor4 from(const Curvature& curvature);
  const Scalar& at(int i, int j, int k, int l) const {
    return entries[static_cast<size_t>((((i - 1) * kDim + (j - 1)) * kDim + (k - 1)) * kDim + (l - 1))];
  }
  Scalar& at(int i, int j, int k, int l) {
    return entries[static_cast<size_t>((((i - 1) * kDim + (j - 1)) * kDim + (k - 1)) * kDim + (l - 1))];
  }
};

struct RicciTensor {
  std::array<std::array<Scalar, kDim>, kDim> entries;

  const Scalar& at(int m, int n) const { return entries[static_cast<size_t>(m - 1)][static_cast<size_t>(n - 1)]; }
  Scalar& at(int m, int n) { return entries[static_cast<size_t>(m - 1)][static_cast<size_t>(n - 1)]; }
  bool symmetric() const;
};

/// Levi-Civita connection 1-forms from structure constants:
/// (ω^g)^i_j(E_k) = ½(a^i_{jk} - a^k_{ij} + a^j_{ki}).
Connection levi_civita(const StructureEquations& eqs);

/// Connections with skew torsion ∇± = ∇^g ± ½T:
/// (ω^±)^i_j(E_k) = (ω^g)^i_j(E_k) ± ½ T(E_k, E_j, E_i).
/// `sign` is +1 for ∇+ (the Bismut-Strominger connection), -1 for ∇-.
Connection torsion_connection(const StructureEquations& eqs, const HermitianStructure& h, int sign);

/// Chern connection: (ω^c)^i_j(E_k) = (ω^g)^i_j(E_k) + ½ dF(JE_k, E_i, E_j).
Connection chern(const StructureEquations& eqs, const HermitianStructure& h);

Curvature curvature(const Connection& connection, const StructureEquations& eqs);

/// Ric_{mn} = sum_i R_{imni} = sum_i Ω^i_n(E_i, E_m).  Symmetric for the
/// Levi-Civita connection, generally not for ∇+.
RicciTensor ricci(const Curvature& curvature);

/// (∇_k T)(E_a, E_b, E_c) for an invariant (constant-coefficient) form T.
Scalar covariant_derivative(const Connection& connection, const KForm& tensor_form, int k,
                            std::span<const int> args);

/// The structural curvature identities at constant dilaton, checked exactly
/// on a balanced geometry: dT is J-invariant ((2,2) criterion); the Ricci
/// form of ∇+ against dT; the two Ricci relations between ∇g and ∇+; and
/// dT_{ijkl} = 2R+_{ijkl} - 2R-_{klij}.
std::vector<VerificationReport> structural_identities(const PresetGeometry& g);

/// The trace 2-form sum_{i,j} J^j_i Ω^i_j whose vanishing is the su(3)
/// holonomy condition for ∇+ (the gravitino equation).
KForm holonomy_trace(const Curvature& curvature, const AlmostComplexStructure& J);

}  // namespace nilflux

#endif  // NILFLUX_CONNECTIONS_HPP
