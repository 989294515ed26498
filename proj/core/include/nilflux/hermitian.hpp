#ifndef NILFLUX_HERMITIAN_HPP
#define NILFLUX_HERMITIAN_HPP

#include <array>
#include <optional>
#include <string>

#include "nilflux/frames.hpp"

namespace nilflux {

/// Complex scalar as a (real, imaginary) pair of Scalars.  Only the small
/// amount of complex arithmetic needed by the realification of complex
/// structure equations and by the balanced-condition checks is provided.
struct ComplexScalar {
  Scalar re, im;

  ComplexScalar() = default;
  ComplexScalar(Scalar real) : re(std::move(real)) {}  // NOLINT
  ComplexScalar(Scalar real, Scalar imag) : re(std::move(real)), im(std::move(imag)) {}
  ComplexScalar(int real) : re(real) {}  // NOLINT

  static ComplexScalar i() { return ComplexScalar(Scalar(0), Scalar(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexScalar conj() const { return {re, -im}; }
  /// |z|^2 = z z̄ as a (real) Scalar.
  Scalar norm_squared() const { return re * re + im * im; }

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexScalar operator-(const ComplexScalar& a) { return {-a.re, -a.im}; }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) { return a.re == b.re && a.im == b.im; }
};

/// Almost complex structure as its action on frame vectors,
/// J E_i = sum_j J^j_i E_j.  Construction enforces J^2 = -id and
/// orthogonality for the orthonormal metric.
class AlmostComplexStructure {
 public:
  using Matrix = std::array<std::array<Scalar, kDim>, kDim>;

  explicit AlmostComplexStructure(Matrix entries);

  /// The standard structure J e^1 = -e^2, J e^3 = -e^4, J e^5 = -e^6, i.e.
  /// J E_1 = -E_2, J E_2 = E_1, ...
  static AlmostComplexStructure standard();

  /// J^row_col (row component of J E_col).
  const Scalar& entry(int row, int col) const {
    return entries_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
  }
  FrameVector apply(const FrameVector& v) const;
  /// J E_i.
  FrameVector je(int i) const;

  friend bool operator==(const AlmostComplexStructure& a, const AlmostComplexStructure& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Matrix entries_;
};

/// Kaehler form of J for the orthonormal metric: F(X,Y) = g(X, JY).
KForm kaehler_form(const AlmostComplexStructure& J);

/// Hermitian data on a geometry: structure equations, J and F, with the
/// compatibility F(E_i,E_j) = J^i_j enforced.
struct HermitianStructure {
  StructureEquations eqs;
  AlmostComplexStructure J;
  KForm F;

  HermitianStructure(StructureEquations equations, AlmostComplexStructure j, KForm f);
};

/// Nijenhuis tensor N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY] evaluated
/// on the frame basis pairs.
class NijenhuisTensor {
 public:
  NijenhuisTensor(const AlmostComplexStructure& J, const StructureEquations& eqs);

  const FrameVector& on(int i, int j) const;  // i < j
  FrameVector evaluate(const FrameVector& x, const FrameVector& y) const;
  bool vanishes() const;

 private:
  std::array<FrameVector, 15> values_;
};

NijenhuisTensor nijenhuis(const AlmostComplexStructure& J, const StructureEquations& eqs);

/// Balanced check: J integrable and d(*F) = 0.  Both d*F and d(F∧F) are
/// computed and must agree.  When `reason` is given it receives a short
/// explanation of a false verdict.
bool balanced_check(const HermitianStructure& h, std::string* reason = nullptr);

/// Parameter data of the two complex-equation families together with the
/// Hermitian form coefficients.  For nilpotent_35 the structure equations are
///   dω^1 = dω^2 = 0,
///   dω^3 = ρ ω^12 + A ω^{1 1̄} + B ω^{1 2̄} + G ω^{2 1̄} + D ω^{2 2̄},
/// (A = 1, G = 0 is the classified normal form; the extra coefficients admit
/// the variants used by individual algebras).  For nonnilpotent_36:
///   dω^1 = 0, dω^2 = E ω^13 + ω^{1 3̄}, dω^3 = C ω^{1 1̄} + ia ω^{1 2̄} - ia Ē ω^{2 1̄},
/// with |E| = 1, C̄ = C E and a real nonzero.
struct BalancedParameterSet {
  enum class Family { nilpotent_35, nonnilpotent_36 };

  Family family = Family::nilpotent_35;
  int rho = 0;  // 0 or 1
  ComplexScalar A{1}, B{0}, G{0}, D{0};  // nilpotent family
  ComplexScalar E{1}, C{0};              // nonnilpotent family
  Scalar a{1};                           // nonnilpotent family, real
  // Hermitian form coefficients of the diagonal+off-diagonal form
  // 2F = i(r² ω^{1 1̄} + s² ω^{2 2̄} + t² ω^{3 3̄}) + u ω^{1 2̄} - ū ω^{2 1̄} + ...
  Scalar r{1}, s{1}, t{1};
  ComplexScalar u{0}, v{0}, z{0};
};

/// Enforces the nonnilpotent-family invariants |E| = 1 and C̄ = C E where
/// the parameters are explicit enough to decide exactly (throws
/// std::invalid_argument on violation).
void validate_nonnilpotent_invariants(const BalancedParameterSet& p);

/// The balanced conditions on a parameter set, checked as exact
/// complex-scalar identities with denominators cleared:
///   nonnilpotent_36:  s² z = -i u v   and   C s² + a Ē u + a ū = 0
///   nilpotent_35:     s²t² - |v|² + D(r²t² - |z|²) = B(i t² ū - v z̄)
bool proposition31_check(const BalancedParameterSet& p);

/// Torsion 3-form T = J dF = -dF(J·, J·, J·).  Also computed through the
/// Hodge star (with the calibrated orientation sign) and the two routes are
/// required to agree; a mismatch throws std::logic_error.
KForm torsion_3form(const HermitianStructure& h);

/// Lee form θ(X) = (δF)(JX) with δ = -*d*.  θ = 0 exactly on balanced
/// structures (cross-checked against balanced_check).
KForm lee_form(const HermitianStructure& h);

}  // namespace nilflux

#endif  // NILFLUX_HERMITIAN_HPP
