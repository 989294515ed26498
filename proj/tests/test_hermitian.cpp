#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilflux/presets.hpp"

using namespace nilflux;

namespace {

AlmostComplexStructure swapped_j() {
  // J' E1 = E3, J' E3 = -E1, J' E2 = E4, J' E4 = -E2, J' E5 = E6, J' E6 = -E5
  AlmostComplexStructure::Matrix m;
  m[2][0] = Scalar(1);
  m[0][2] = Scalar(-1);
  m[3][1] = Scalar(1);
  m[1][3] = Scalar(-1);
  m[5][4] = Scalar(1);
  m[4][5] = Scalar(-1);
  return AlmostComplexStructure(std::move(m));
}

}  // namespace

TEST_CASE("almost complex structure axioms are enforced") {
  AlmostComplexStructure J = AlmostComplexStructure::standard();
  FrameVector je1 = J.je(1);
  CHECK(je1 == -FrameVector::basis(2));
  CHECK(J.apply(J.je(3)) == -FrameVector::basis(3));

  AlmostComplexStructure::Matrix bad{};
  bad[0][0] = Scalar(1);  // not square to -id
  CHECK_THROWS_AS(AlmostComplexStructure(std::move(bad)), std::logic_error);
}

TEST_CASE("kaehler form of the standard structure") {
  CHECK(kaehler_form(AlmostComplexStructure::standard()) == KForm::parse("e12 + e34 + e56"));
  // F compatibility enforced by HermitianStructure
  StructureEquations eqs;
  CHECK_THROWS_AS(HermitianStructure(eqs, AlmostComplexStructure::standard(), KForm::parse("e12")),
                  std::logic_error);
}

TEST_CASE("nijenhuis tensor vanishes for the preset complex structures") {
  CHECK(nijenhuis(AlmostComplexStructure::standard(), make_preset("iwasawa").eqs).vanishes());
  CHECK(nijenhuis(AlmostComplexStructure::standard(), make_preset("h19minus").eqs).vanishes());
}

TEST_CASE("nijenhuis tensor detects the swapped structure on h3") {
  StructureEquations h3 = make_preset("h3").eqs;
  NijenhuisTensor n = nijenhuis(swapped_j(), h3);
  CHECK_FALSE(n.vanishes());
  // brute-force expansion of the four bracket terms on (E1, E2):
  // N(E1,E2) = [E3,E4] - [E1,E2] - J'[E3,E2] - J'[E1,E4] = -2tE6 - 2tE6
  FrameVector expected;
  expected[6] = Scalar(-4) * Scalar::param("t");
  CHECK(n.on(1, 2) == expected);
  CHECK(n.evaluate(FrameVector::basis(1), FrameVector::basis(2)) == expected);
  CHECK(n.evaluate(FrameVector::basis(2), FrameVector::basis(1)) == -expected);
}

TEST_CASE("balanced check") {
  CHECK(balanced_check(make_preset("iwasawa").hermitian()));
  CHECK(balanced_check(make_preset("h19minus").hermitian()));
  CHECK(balanced_check(make_preset("torus").hermitian()));

  // the D=+1 variant on h3 admits no compatible balanced structure
  PresetGeometry jplus = make_h3(Scalar::param("t"), +1);
  std::string reason;
  CHECK_FALSE(balanced_check(jplus.hermitian(), &reason));
  CHECK(reason == "d*F != 0");

  // a non-integrable structure reports the Nijenhuis obstruction
  StructureEquations h3 = make_preset("h3").eqs;
  AlmostComplexStructure jswap = swapped_j();
  HermitianStructure broken(h3, jswap, kaehler_form(jswap));
  std::string why;
  CHECK_FALSE(balanced_check(broken, &why));
  CHECK(why.find("not integrable") != std::string::npos);
}

TEST_CASE("the torsion dual-route assertion rejects non-balanced structures") {
  // unit-coefficient h2 notation: a Lie algebra whose standard structure is
  // not balanced, so J dF and *(dF) genuinely disagree
  StructureEquations h2 = StructureEquations::parse("(0,0,0,0,12,34)");
  AlmostComplexStructure J = AlmostComplexStructure::standard();
  HermitianStructure h(h2, J, kaehler_form(J));
  CHECK_FALSE(balanced_check(h));
  CHECK_THROWS_AS(torsion_3form(h), std::logic_error);
}

TEST_CASE("proposition 3.1 balanced conditions") {
  // nilpotent family, D=-1, diagonal metric: always balanced
  BalancedParameterSet p;
  p.D = ComplexScalar{-1};
  p.B = ComplexScalar{Scalar::param("b")};
  p.r = Scalar(1);
  p.s = Scalar(1);
  p.t = Scalar::param("t");
  CHECK(proposition31_check(p));

  // D=+1 fails at r=s: 2t^2 != 0
  p.D = ComplexScalar{1};
  p.B = ComplexScalar{0};
  CHECK_FALSE(proposition31_check(p));

  // non-nilpotent family with u=v=z=0 and C=0
  BalancedParameterSet q;
  q.family = BalancedParameterSet::Family::nonnilpotent_36;
  q.E = ComplexScalar{1};
  q.C = ComplexScalar{0};
  CHECK(proposition31_check(q));

  // non-nilpotent with nonzero C is obstructed
  q.C = ComplexScalar{1};
  CHECK_FALSE(proposition31_check(q));

  // general check: z = -i u v / s^2 condition with denominators cleared
  BalancedParameterSet r;
  r.family = BalancedParameterSet::Family::nonnilpotent_36;
  r.s = Scalar(2);
  r.u = ComplexScalar{Scalar(2), Scalar(0)};
  r.v = ComplexScalar{Scalar(0), Scalar(2)};
  // z = -i * u*v / s^2 = -i * 4i/4 = 1
  r.z = ComplexScalar{1};
  r.C = ComplexScalar{0};
  r.a = Scalar(0);  // kill the second condition's u-terms
  CHECK(proposition31_check(r));
}

TEST_CASE("torsion 3-form") {
  Scalar t = Scalar::param("t");
  CHECK(torsion_3form(make_preset("iwasawa").hermitian()) ==
        KForm::parse("-t*e135 - t*e146 - t*e236 + t*e245"));
  CHECK(torsion_3form(make_preset("h3").hermitian()) == KForm::parse("-2*t*e126 + 2*t*e346"));
  CHECK(torsion_3form(make_preset("torus").hermitian()).is_zero());
  (void)t;
}

TEST_CASE("lee form") {
  CHECK(lee_form(make_preset("iwasawa").hermitian()).is_zero());
  CHECK(lee_form(make_preset("h19minus").hermitian()).is_zero());
  PresetGeometry jplus = make_h3(Scalar::param("t"), +1);
  CHECK_FALSE(lee_form(jplus.hermitian()).is_zero());
}

TEST_CASE("F is nondegenerate: F ∧ F ∧ F = 6 volume") {
  for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    KForm F = make_preset(name).F;
    CHECK(wedge(F, wedge(F, F)) == KForm::volume() * Scalar(6));
  }
}

TEST_CASE("nonnilpotent family invariants are enforced") {
  BalancedParameterSet p;
  p.family = BalancedParameterSet::Family::nonnilpotent_36;
  p.E = ComplexScalar{2};  // |E| != 1
  CHECK_THROWS_AS(proposition31_check(p), std::invalid_argument);

  p.E = ComplexScalar{Scalar(0), Scalar(1)};  // E = i, |E| = 1
  p.C = ComplexScalar{1};                     // conj(C) = 1 != C*E = i
  CHECK_THROWS_AS(proposition31_check(p), std::invalid_argument);

  // E = -1, C purely imaginary: conj(C) = -C = C*E holds
  p.E = ComplexScalar{-1};
  p.C = ComplexScalar{Scalar(0), Scalar(3)};
  CHECK_NOTHROW(proposition31_check(p));
}
