#ifndef NILFLUX_FRAMES_HPP
#define NILFLUX_FRAMES_HPP

#include <array>
#include <string>
#include <string_view>

#include "nilflux/exterior.hpp"

namespace nilflux {

/// Structure equations de^k = sum_{i<j} a^k_{ij} e^i ∧ e^j of an invariant
/// coframe, stored as the six 2-forms de^k.  The sole input defining a
/// geometry.
class StructureEquations {
 public:
  StructureEquations();  // abelian (all zero)

  /// Sets a^k_{ij} for i < j.
  void set(int k, int i, int j, Scalar value);
  void set_de(int k, KForm de2form);

  /// a^k_{ij} with the antisymmetric convention a^k_{ji} = -a^k_{ij}.
  Scalar a(int k, int i, int j) const;
  const KForm& de(int k) const { return de_[static_cast<size_t>(k - 1)]; }

  /// Exterior derivative on invariant forms (graded Leibniz extension of de).
  KForm d(const KForm& form) const;

  /// d(de^k) = 0 for every k, i.e. the dual Jacobi identity.
  bool jacobi_ok() const;

  /// Lie bracket of frame fields: [E_i, E_j]^k = -a^k_{ij}, extended
  /// bilinearly over Scalar components.
  FrameVector bracket(const FrameVector& x, const FrameVector& y) const;

  StructureEquations substitute(const std::map<int, Rational>& bindings) const;

  friend bool operator==(const StructureEquations& a, const StructureEquations& b) { return a.de_ == b.de_; }
  friend bool operator!=(const StructureEquations& a, const StructureEquations& b) { return !(a == b); }

  /// Canonical notation "(0,0,0,0,12,34)"; coefficients other than 1 render
  /// as "c*ij" with one term per Laurent monomial.
  std::string render() const;

  /// Parses the parenthesized 6-entry notation.  Each entry is 0 or a
  /// ±-separated list of index pairs with optional coefficients
  /// ("12+34", "14-35", "2t·12", "2*t*12").  Throws StructureParseError.
  static StructureEquations parse(std::string_view text);

 private:
  std::array<KForm, kDim> de_;
};

struct StructureParseError : std::runtime_error {
  StructureParseError(size_t pos, const std::string& message)
      : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

}  // namespace nilflux

#endif  // NILFLUX_FRAMES_HPP
