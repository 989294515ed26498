#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilflux/presets.hpp"

using namespace nilflux;

TEST_CASE("exterior derivative from structure equations") {
  PresetGeometry iwasawa = make_preset("iwasawa");
  CHECK(iwasawa.eqs.de(5) == KForm::parse("t*e13 - t*e24"));
  CHECK(iwasawa.eqs.d(KForm::basis(MultiIndex{5})) == KForm::parse("t*e13 - t*e24"));
  for (int k = 1; k <= 4; ++k) CHECK(iwasawa.eqs.de(k).is_zero());

  KForm F = KForm::parse("e12 + e34 + e56");
  CHECK(iwasawa.eqs.d(F) == KForm::parse("t*e136 - t*e145 - t*e235 - t*e246"));
}

TEST_CASE("d satisfies the graded Leibniz rule") {
  StructureEquations eqs = make_preset("h2h4h5").eqs;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int iter = 0; iter < 50; ++iter) {
    uint8_t ma = static_cast<uint8_t>(rng() % 64);
    uint8_t mb = static_cast<uint8_t>(rng() % 64);
    KForm a = KForm::monomial(Scalar(coeff(rng)), MultiIndex::from_mask(ma));
    KForm b = KForm::monomial(Scalar(coeff(rng)), MultiIndex::from_mask(mb));
    if (a.is_zero() || b.is_zero()) continue;
    KForm lhs = eqs.d(wedge(a, b));
    KForm rhs = wedge(eqs.d(a), b);
    KForm second = wedge(a, eqs.d(b));
    if (a.degree() % 2 == 1) second = -second;
    rhs += second;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("d is nilpotent on all 64 basis monomials of every preset") {
  for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    StructureEquations eqs = make_preset(name).eqs;
    for (uint8_t mask = 0; mask < 64; ++mask) {
      KForm basis = KForm::basis(MultiIndex::from_mask(mask));
      CHECK(eqs.d(eqs.d(basis)).is_zero());
    }
  }
}

TEST_CASE("jacobi check") {
  CHECK(make_preset("h3").eqs.jacobi_ok());
  CHECK(StructureEquations().jacobi_ok());  // abelian
  // de5 = e16, de6 = e12 is a Lie algebra: d(de5) = -e1 ∧ e12 = 0
  CHECK(StructureEquations::parse("(0,0,0,0,16,12)").jacobi_ok());
  // de5 = e36, de6 = e12 is not: d(de5) = -e3 ∧ e12 = -e123
  StructureEquations bad = StructureEquations::parse("(0,0,0,0,36,12)");
  CHECK_FALSE(bad.jacobi_ok());
  CHECK(bad.d(bad.de(5)) == KForm::parse("-e123"));
}

TEST_CASE("structure notation parsing") {
  StructureEquations h2 = StructureEquations::parse("(0,0,0,0,12,34)");
  CHECK(h2.de(5) == KForm::basis(MultiIndex{1, 2}));
  CHECK(h2.de(6) == KForm::basis(MultiIndex{3, 4}));
  for (int k = 1; k <= 4; ++k) CHECK(h2.de(k).is_zero());

  StructureEquations h19 = StructureEquations::parse("(0,0,0,12,23,14-35)");
  CHECK(h19.de(4) == KForm::basis(MultiIndex{1, 2}));
  CHECK(h19.de(5) == KForm::basis(MultiIndex{2, 3}));
  CHECK(h19.de(6) == KForm::basis(MultiIndex{1, 4}) - KForm::basis(MultiIndex{3, 5}));

  CHECK(StructureEquations::parse("(0,0,0,0,0,0)") == StructureEquations());

  // coefficients: juxtaposed, starred, and with the middle dot
  StructureEquations with_param = StructureEquations::parse("(0,0,0,0,2t\xc2\xb7" "12,1/2*34+t^2*13)");
  CHECK(with_param.de(5) == KForm::monomial(Scalar(2) * Scalar::param("t"), MultiIndex{1, 2}));
  CHECK(with_param.de(6) == KForm::monomial(Scalar(Rational(1, 2)), MultiIndex{3, 4}) +
                                KForm::monomial(Scalar::param("t", 2), MultiIndex{1, 3}));

  CHECK_THROWS_AS(StructureEquations::parse("(0,0,0,0,12)"), StructureParseError);      // five entries
  CHECK_THROWS_AS(StructureEquations::parse("(0,0,0,0,17,0)"), StructureParseError);    // index out of range
  CHECK_THROWS_AS(StructureEquations::parse("(0,0,0,0,21,0)"), StructureParseError);    // i >= j
  CHECK_THROWS_AS(StructureEquations::parse("(0,0,0,0,123,0)"), StructureParseError);   // malformed pair
  CHECK_THROWS_AS(StructureEquations::parse("0,0,0,0,0,0"), StructureParseError);       // missing parens

  // error positions point into the text
  try {
    StructureEquations::parse("(0,0,0,0,21,0)");
    CHECK(false);
  } catch (const StructureParseError& e) {
    CHECK(e.position == 9);
  }
}

TEST_CASE("render/parse round-trip") {
  for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    StructureEquations eqs = make_preset(name).eqs;
    CHECK(StructureEquations::parse(eqs.render()) == eqs);
  }
  // canonical notation is a fixed point
  std::string canonical = "(0,0,0,0,12,34)";
  CHECK(StructureEquations::parse(canonical).render() == canonical);

  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int iter = 0; iter < 40; ++iter) {
    StructureEquations eqs;
    for (int n = 0; n < 4; ++n) {
      int i = 1 + static_cast<int>(rng() % 5);
      int j = i + 1 + static_cast<int>(rng() % (6 - i));
      eqs.set(1 + static_cast<int>(rng() % 6), i, j, Scalar(coeff(rng)) * Scalar::param("t", coeff(rng) >= 0));
    }
    CHECK(StructureEquations::parse(eqs.render()) == eqs);
  }
}

TEST_CASE("brackets") {
  StructureEquations h3 = make_preset("h3").eqs;
  FrameVector bracket12 = h3.bracket(FrameVector::basis(1), FrameVector::basis(2));
  // de6 = -2t e12 + 2t e34  =>  [E1, E2] = 2t E6
  FrameVector expected;
  expected[6] = Scalar(2) * Scalar::param("t");
  CHECK(bracket12 == expected);
  CHECK(h3.bracket(FrameVector::basis(2), FrameVector::basis(1)) == -expected);
  CHECK(h3.bracket(FrameVector::basis(1), FrameVector::basis(5)).is_zero());
}

TEST_CASE("realify reproduces the printed structure equations") {
  // the (6.2) family
  PresetGeometry g = make_preset("h2h4h5");
  Scalar t = Scalar::param("t"), b = Scalar::param("b");
  CHECK(g.eqs.de(5) == KForm::monomial(t * b + t, MultiIndex{1, 3}) + KForm::monomial(t * b - t, MultiIndex{2, 4}));
  CHECK(g.eqs.de(6) ==
        KForm::monomial(Scalar(-2) * t, MultiIndex{1, 2}) + KForm::monomial(t - t * b, MultiIndex{1, 4}) +
            KForm::monomial(t * b + t, MultiIndex{2, 3}) + KForm::monomial(Scalar(2) * t, MultiIndex{3, 4}));

  // the (5.1) equations from rho=0, B=0, D=-1
  PresetGeometry h3 = make_preset("h3");
  CHECK(h3.eqs.de(5).is_zero());
  CHECK(h3.eqs.de(6) == KForm::parse("-2*t*e12 + 2*t*e34"));

  // the (8.1) equations from the non-nilpotent family
  PresetGeometry h19 = make_preset("h19minus");
  CHECK(h19.eqs.de(3) == KForm::parse("2*e15"));
  CHECK(h19.eqs.de(4) == KForm::parse("2*e25"));
  CHECK(h19.eqs.de(5).is_zero());
  CHECK(h19.eqs.de(6) == KForm::parse("2*e13 + 2*e24"));

  // every realified preset passes the Jacobi check and carries the standard J
  for (const char* name : {"iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    PresetGeometry preset = make_preset(name);
    CHECK(preset.eqs.jacobi_ok());
    CHECK(preset.J == AlmostComplexStructure::standard());
    CHECK(preset.F == KForm::parse("e12 + e34 + e56"));
  }
}

TEST_CASE("realify rejects unsupported configurations") {
  BalancedParameterSet p;
  p.u = ComplexScalar{1};
  CHECK_THROWS_AS(realify(p), std::invalid_argument);

  BalancedParameterSet degenerate;
  degenerate.t = Scalar(0);
  CHECK_THROWS_AS(realify(degenerate), std::invalid_argument);
}

TEST_CASE("preset binding substitutes parameters") {
  PresetGeometry g = make_preset("h3").bind({{params::id("t"), Rational(1)}});
  CHECK(g.eqs.de(6) == KForm::parse("-2*e12 + 2*e34"));
  CHECK_THROWS_AS(make_preset("bogus"), std::invalid_argument);
}
