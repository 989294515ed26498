#include "nilflux/presets.hpp"

#include <stdexcept>

namespace nilflux {

namespace {

/// Complex-valued invariant form, as a (re, im) pair.
struct ComplexKForm {
  KForm re, im;

  friend ComplexKForm operator+(const ComplexKForm& a, const ComplexKForm& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexKForm operator*(const ComplexScalar& c, const ComplexKForm& f) {
    return {f.re * c.re - f.im * c.im, f.im * c.re + f.re * c.im};
  }
  friend ComplexKForm cwedge(const ComplexKForm& a, const ComplexKForm& b) {
    return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
  }
  ComplexKForm conj() const { return {re, -im}; }
};

/// Inverse of a single Laurent monomial (e.g. a parameter or a rational).
Scalar monomial_inverse(const Scalar& s) {
  if (s.terms().size() != 1) throw std::invalid_argument("metric coefficient must be a nonzero monomial");
  const auto& [mono, coeff] = *s.terms().begin();
  Scalar out(Rational(1) / coeff);
  for (const auto& [pid, exp] : mono) out = out * Scalar::param(params::name(pid), -exp);
  return out;
}

void require_nonzero(const Scalar& s, const char* what) {
  if (s.is_zero()) throw std::invalid_argument(std::string(what) + " must be nonzero");
  if (auto r = s.as_rational(); r && *r == 0) throw std::invalid_argument(std::string(what) + " must be nonzero");
}

}  // namespace

PresetGeometry PresetGeometry::bind(const std::map<int, Rational>& bindings) const {
  PresetGeometry out{name, eqs.substitute(bindings), J, F};
  return out;
}

PresetGeometry realify(const BalancedParameterSet& p, std::string_view name) {
  if (!p.u.is_zero() || !p.v.is_zero() || !p.z.is_zero())
    throw std::invalid_argument("unsupported configuration: realify requires the diagonal Hermitian form (u=v=z=0)");
  require_nonzero(p.r, "r");
  require_nonzero(p.s, "s");
  require_nonzero(p.t, "t");

  Scalar inv_r = monomial_inverse(p.r);
  Scalar inv_s = monomial_inverse(p.s);
  Scalar inv_t = monomial_inverse(p.t);
  // (1,0)-coframe in terms of the orthonormal real coframe
  ComplexKForm w1{KForm::basis(MultiIndex{1}) * inv_r, KForm::basis(MultiIndex{2}) * inv_r};
  ComplexKForm w2{KForm::basis(MultiIndex{3}) * inv_s, KForm::basis(MultiIndex{4}) * inv_s};
  ComplexKForm w3{KForm::basis(MultiIndex{5}) * inv_t, KForm::basis(MultiIndex{6}) * inv_t};

  StructureEquations eqs;
  auto assign = [&eqs](int re_slot, int im_slot, const ComplexKForm& dw, const Scalar& scale) {
    eqs.set_de(re_slot, dw.re * scale);
    eqs.set_de(im_slot, dw.im * scale);
  };

  if (p.family == BalancedParameterSet::Family::nilpotent_35) {
    ComplexKForm dw3 = ComplexScalar{Scalar(p.rho)} * cwedge(w1, w2);
    dw3 = dw3 + p.A * cwedge(w1, w1.conj());
    dw3 = dw3 + p.B * cwedge(w1, w2.conj());
    dw3 = dw3 + p.G * cwedge(w2, w1.conj());
    dw3 = dw3 + p.D * cwedge(w2, w2.conj());
    assign(5, 6, dw3, p.t);
  } else {
    validate_nonnilpotent_invariants(p);
    ComplexKForm dw2 = p.E * cwedge(w1, w3) + ComplexScalar{1} * cwedge(w1, w3.conj());
    ComplexKForm dw3 = p.C * cwedge(w1, w1.conj());
    dw3 = dw3 + (ComplexScalar::i() * ComplexScalar{p.a}) * cwedge(w1, w2.conj());
    dw3 = dw3 + (-(ComplexScalar::i() * ComplexScalar{p.a}) * p.E.conj()) * cwedge(w2, w1.conj());
    assign(3, 4, dw2, p.s);
    assign(5, 6, dw3, p.t);
  }

  if (!eqs.jacobi_ok()) throw std::logic_error("realified structure equations violate the Jacobi identity");

  AlmostComplexStructure J = AlmostComplexStructure::standard();
  PresetGeometry out{std::string(name), std::move(eqs), J, kaehler_form(J)};
  return out;
}

PresetGeometry make_iwasawa(const Scalar& t) {
  BalancedParameterSet p;
  p.rho = 1;
  p.A = ComplexScalar{0};
  p.t = t;
  return realify(p, "iwasawa");
}

PresetGeometry make_h3(const Scalar& t, int d_sign) {
  BalancedParameterSet p;
  p.rho = 0;
  p.D = ComplexScalar{Scalar(d_sign)};
  p.t = t;
  return realify(p, "h3");
}

PresetGeometry make_h2h4h5(const Scalar& t, const Scalar& b) {
  BalancedParameterSet p;
  p.rho = 1;
  p.B = ComplexScalar{b};
  p.D = ComplexScalar{-1};
  p.t = t;
  return realify(p, "h2h4h5");
}

PresetGeometry make_h6(const Scalar& t) {
  BalancedParameterSet p;
  p.rho = 1;
  p.A = ComplexScalar{0};
  p.G = ComplexScalar{-1};
  p.t = t;
  return realify(p, "h6");
}

PresetGeometry make_h19minus() {
  BalancedParameterSet p;
  p.family = BalancedParameterSet::Family::nonnilpotent_36;
  p.E = ComplexScalar{1};
  p.C = ComplexScalar{0};
  p.a = Scalar(1);
  return realify(p, "h19minus");
}

PresetGeometry make_preset(std::string_view name) {
  Scalar t = Scalar::param("t");
  if (name == "torus") {
    AlmostComplexStructure J = AlmostComplexStructure::standard();
    return PresetGeometry{"torus", StructureEquations(), J, kaehler_form(J)};
  }
  if (name == "iwasawa") return make_iwasawa(t);
  if (name == "h3") return make_h3(t);
  if (name == "h2h4h5") return make_h2h4h5(t, Scalar::param("b"));
  if (name == "h6") return make_h6(t);
  if (name == "h19minus") return make_h19minus();
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

}  // namespace nilflux
