#include "nilflux/hermitian.hpp"

#include <stdexcept>

namespace nilflux {

namespace {

void check_j_axioms(const AlmostComplexStructure::Matrix& m) {
  // J² = -identity
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      Scalar sum;
      for (int k = 0; k < kDim; ++k)
        sum += m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
      Scalar expected = (i == j) ? Scalar(-1) : Scalar(0);
      if (sum != expected) throw std::logic_error("almost complex structure violates J^2 = -id");
    }
  }
  // orthogonality: g(JE_i, JE_j) = δ_ij
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      Scalar sum;
      for (int k = 0; k < kDim; ++k)
        sum += m[static_cast<size_t>(k)][static_cast<size_t>(i)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
      Scalar expected = (i == j) ? Scalar(1) : Scalar(0);
      if (sum != expected) throw std::logic_error("almost complex structure is not orthogonal");
    }
  }
}

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(Matrix entries) : entries_(std::move(entries)) {
  check_j_axioms(entries_);
}

AlmostComplexStructure AlmostComplexStructure::standard() {
  Matrix m;
  for (int pair = 0; pair < 3; ++pair) {
    int i = 2 * pair;  // 0-based
    m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = Scalar(-1);  // J E_{i+1} = -E_{i+2}
    m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = Scalar(1);   // J E_{i+2} = E_{i+1}
  }
  return AlmostComplexStructure(std::move(m));
}

FrameVector AlmostComplexStructure::apply(const FrameVector& v) const {
  FrameVector out;
  for (int col = 1; col <= kDim; ++col) {
    if (v[col].is_zero()) continue;
    for (int row = 1; row <= kDim; ++row) {
      const Scalar& e = entry(row, col);
      if (!e.is_zero()) out[row] += v[col] * e;
    }
  }
  return out;
}

FrameVector AlmostComplexStructure::je(int i) const { return apply(FrameVector::basis(i)); }

KForm kaehler_form(const AlmostComplexStructure& J) {
  KForm F = KForm::zero(2);
  for (int i = 1; i <= kDim; ++i)
    for (int j = i + 1; j <= kDim; ++j) F += KForm::monomial(J.entry(i, j), MultiIndex{i, j});
  return F;
}

HermitianStructure::HermitianStructure(StructureEquations equations, AlmostComplexStructure j, KForm f)
    : eqs(std::move(equations)), J(std::move(j)), F(std::move(f)) {
  if (F != kaehler_form(J)) throw std::logic_error("F does not match g(., J.) for the orthonormal metric");
}

NijenhuisTensor::NijenhuisTensor(const AlmostComplexStructure& J, const StructureEquations& eqs) {
  size_t slot = 0;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      FrameVector ei = FrameVector::basis(i);
      FrameVector ej = FrameVector::basis(j);
      FrameVector jei = J.je(i);
      FrameVector jej = J.je(j);
      FrameVector n = eqs.bracket(jei, jej);
      n += -eqs.bracket(ei, ej);
      n += -J.apply(eqs.bracket(jei, ej));
      n += -J.apply(eqs.bracket(ei, jej));
      values_[slot++] = n;
    }
  }
}

const FrameVector& NijenhuisTensor::on(int i, int j) const {
  if (!(i >= 1 && i < j && j <= kDim)) throw std::invalid_argument("NijenhuisTensor::on needs i < j");
  // flat index of (i,j) with i<j in row-major pair order
  int slot = 0;
  for (int a = 1; a < i; ++a) slot += kDim - a;
  slot += j - i - 1;
  return values_[static_cast<size_t>(slot)];
}

FrameVector NijenhuisTensor::evaluate(const FrameVector& x, const FrameVector& y) const {
  FrameVector out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      Scalar w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero()) continue;
      out += on(i, j) * w;
    }
  }
  return out;
}

bool NijenhuisTensor::vanishes() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

NijenhuisTensor nijenhuis(const AlmostComplexStructure& J, const StructureEquations& eqs) {
  return NijenhuisTensor(J, eqs);
}

bool balanced_check(const HermitianStructure& h, std::string* reason) {
  if (!nijenhuis(h.J, h.eqs).vanishes()) {
    if (reason) *reason = "J is not integrable (Nijenhuis tensor nonzero)";
    return false;
  }
  bool star_route = h.eqs.d(hodge_star(h.F)).is_zero();
  bool square_route = h.eqs.d(wedge(h.F, h.F)).is_zero();
  if (star_route != square_route) throw std::logic_error("d*F and d(F∧F) disagree");
  if (!star_route && reason) *reason = "d*F != 0";
  return star_route;
}

void validate_nonnilpotent_invariants(const BalancedParameterSet& p) {
  // |E| = 1 and C̄ = C E; enforced when the parameters are explicit enough
  // to decide exactly.
  Scalar unit_defect = p.E.norm_squared() - Scalar(1);
  if (unit_defect.is_constant() && !unit_defect.is_zero())
    throw std::invalid_argument("nonnilpotent family requires |E| = 1");
  ComplexScalar twist = p.C.conj() - p.C * p.E;
  if (twist.re.is_constant() && twist.im.is_constant() && !twist.is_zero())
    throw std::invalid_argument("nonnilpotent family requires conj(C) = C*E");
}

bool proposition31_check(const BalancedParameterSet& p) {
  using Family = BalancedParameterSet::Family;
  if (p.family == Family::nonnilpotent_36) {
    validate_nonnilpotent_invariants(p);
    ComplexScalar s2{p.s * p.s};
    ComplexScalar lhs1 = s2 * p.z + ComplexScalar::i() * p.u * p.v;  // s²z - (-iuv)
    ComplexScalar lhs2 = p.C * s2 + ComplexScalar{p.a} * p.E.conj() * p.u + ComplexScalar{p.a} * p.u.conj();
    return lhs1.is_zero() && lhs2.is_zero();
  }
  Scalar r2 = p.r * p.r, s2 = p.s * p.s, t2 = p.t * p.t;
  ComplexScalar lhs{s2 * t2 - p.v.norm_squared()};
  lhs = lhs + p.D * ComplexScalar{r2 * t2 - p.z.norm_squared()};
  ComplexScalar rhs = p.B * (ComplexScalar::i() * ComplexScalar{t2} * p.u.conj() - p.v * p.z.conj());
  return lhs == rhs;
}

KForm torsion_3form(const HermitianStructure& h) {
  KForm dF = h.eqs.d(h.F);
  // J route: T(X,Y,Z) = -dF(JX, JY, JZ)
  KForm via_j = KForm::zero(3);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      for (int k = j + 1; k <= kDim; ++k) {
        const FrameVector args[3] = {h.J.je(i), h.J.je(j), h.J.je(k)};
        Scalar value = -dF.evaluate(args);
        via_j += KForm::monomial(std::move(value), MultiIndex{i, j, k});
      }
    }
  }
  // Star route.  With *(e^I) = sign(I, I^c) e^{I^c} and orientation e^123456
  // the torsion equals +*(dF); the overall sign is calibrated against the
  // printed torsion tables and cross-checked here on every call.
  KForm via_star = hodge_star(dF);
  if (via_j != via_star) throw std::logic_error("torsion convention error: J dF != *(dF)");
  return via_j;
}

KForm lee_form(const HermitianStructure& h) {
  // δF = -*d*F, θ(X) = (δF)(JX)
  KForm delta_f = -hodge_star(h.eqs.d(hodge_star(h.F)));
  KForm theta = KForm::zero(1);
  for (int i = 1; i <= kDim; ++i) {
    const FrameVector args[1] = {h.J.je(i)};
    theta += KForm::monomial(delta_f.evaluate(args), MultiIndex{i});
  }
  bool balanced = balanced_check(h);
  if (balanced != theta.is_zero()) throw std::logic_error("lee form and balanced check disagree");
  return theta;
}

}  // namespace nilflux
