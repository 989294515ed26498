#ifndef NILFLUX_PRESETS_HPP
#define NILFLUX_PRESETS_HPP

#include <string>
#include <string_view>

#include "nilflux/hermitian.hpp"

namespace nilflux {

/// A named geometry: structure equations with their compatible complex
/// structure and Kaehler form.
struct PresetGeometry {
  std::string name;
  StructureEquations eqs;
  AlmostComplexStructure J;
  KForm F;

  HermitianStructure hermitian() const { return HermitianStructure(eqs, J, F); }
  /// Same geometry with the listed parameters bound to rational values.
  PresetGeometry bind(const std::map<int, Rational>& bindings) const;
};

/// Builds the real geometry of a complex-equation family: realifies the
/// coframe via e^1 + i e^2 = r ω^1, e^3 + i e^4 = s ω^2, e^5 + i e^6 = t ω^3,
/// expanding dω into the real structure equations, with the standard J and
/// F = e^12 + e^34 + e^56.  Requires the diagonal Hermitian form
/// (u = v = z = 0) and nonzero r, s, t; the result always satisfies the
/// Jacobi identity (checked).
PresetGeometry realify(const BalancedParameterSet& p, std::string_view name = "custom");

/// Named presets: torus, iwasawa, h3, h2h4h5, h6, h19minus.  Scaled families
/// carry the symbolic fiber parameter t (and b for h2h4h5); h19minus is the
/// unit-scale geometry.
PresetGeometry make_preset(std::string_view name);

PresetGeometry make_iwasawa(const Scalar& t);
/// d_sign selects the complex structure: -1 the balanced-compatible one,
/// +1 the variant with no compatible balanced metric.
PresetGeometry make_h3(const Scalar& t, int d_sign = -1);
PresetGeometry make_h2h4h5(const Scalar& t, const Scalar& b);
PresetGeometry make_h6(const Scalar& t);
PresetGeometry make_h19minus();

}  // namespace nilflux

#endif  // NILFLUX_PRESETS_HPP
