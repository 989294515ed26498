#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilflux/anomaly.hpp"

using namespace nilflux;

namespace {

KForm raw_of(const PresetGeometry& g, ConnectionKind kind) {
  HermitianStructure h = g.hermitian();
  Connection c;
  switch (kind) {
    case ConnectionKind::levi_civita: c = levi_civita(g.eqs); break;
    case ConnectionKind::plus: c = torsion_connection(g.eqs, h, +1); break;
    case ConnectionKind::minus: c = torsion_connection(g.eqs, h, -1); break;
    case ConnectionKind::chern: c = chern(g.eqs, h); break;
    default: throw std::logic_error("named connection expected");
  }
  return pontrjagin_raw(curvature(c, g.eqs), g.eqs).raw;
}

}  // namespace

TEST_CASE("raw Pontrjagin values") {
  PresetGeometry iwasawa = make_preset("iwasawa");
  CHECK(raw_of(iwasawa, ConnectionKind::levi_civita) == KForm::parse("2*t^4*e1234"));
  CHECK(raw_of(iwasawa, ConnectionKind::plus).is_zero());

  PresetGeometry h3 = make_preset("h3");
  CHECK(raw_of(h3, ConnectionKind::plus) == KForm::parse("-64*t^4*e1234"));

  PresetGeometry h245 = make_preset("h2h4h5");
  CHECK(raw_of(h245, ConnectionKind::levi_civita) ==
        KForm::parse("-2*t^4*b^4*e1234 - 8*t^4*b^2*e1234 - 22*t^4*e1234"));
}

TEST_CASE("raw Pontrjagin form is invariant under the fiber-scale relabeling") {
  // computed on the tp-structure and read on the shared coframe e^i = f^i
  PresetGeometry h3_tp = make_h3(Scalar::param("tp"));
  CHECK(raw_of(h3_tp, ConnectionKind::plus) == KForm::parse("-64*tp^4*e1234"));
}

TEST_CASE("instanton checks") {
  PresetGeometry h3 = make_preset("h3");
  HermitianStructure h = h3.hermitian();

  PresetGeometry h3_tp = make_h3(Scalar::param("tp"));
  HermitianStructure h_tp = h3_tp.hermitian();
  Curvature plus_tp = curvature(torsion_connection(h3_tp.eqs, h_tp, +1), h3_tp.eqs);
  CHECK(instanton_check(plus_tp, h));  // for all t simultaneously

  Curvature lc = curvature(levi_civita(h3.eqs), h3.eqs);
  CHECK_FALSE(instanton_check(lc, h));

  PresetGeometry h19 = make_preset("h19minus");
  InstantonBundle family = instanton_family_h19(Scalar::param("lambda"), Scalar::param("mu"));
  CHECK(instanton_check(family.curvature, h19.hermitian()));
}

TEST_CASE("the h19 instanton family") {
  Scalar lambda = Scalar::param("lambda"), mu = Scalar::param("mu");
  InstantonBundle family = instanton_family_h19(lambda, mu);
  CHECK(family.curvature.form(2, 3) == KForm::parse("e13 + e24") * (Scalar(-2) * mu));
  CHECK(family.curvature.form(1, 2) == KForm::parse("e13 + e24") * (Scalar(2) * mu));
  CHECK(family.p1raw == KForm::parse("-120*mu^2*e1234"));

  InstantonBundle flat = instanton_family_h19(lambda, Scalar(0));
  CHECK(flat.curvature.is_zero());
  CHECK(flat.p1raw.is_zero());
}

TEST_CASE("the abelian instanton carries the fixed trace form") {
  InstantonBundle a = abelian_cardoso();
  CHECK(a.p1raw == KForm::parse("-2*e1234"));
  CHECK(a.pointwise_reconstructed);
  // its representatives are instantons for every preset structure
  for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    HermitianStructure h = make_preset(name).hermitian();
    CHECK(instanton_check_forms(a.curvature_forms, h));
  }
}

TEST_CASE("solve_alpha_prime") {
  PresetGeometry iwasawa = make_preset("iwasawa");
  HermitianStructure h = iwasawa.hermitian();
  KForm dT = iwasawa.eqs.d(torsion_3form(h));

  // Bianchi with the (+)-connection and the abelian instanton: invalid sign
  VerificationReport r = solve_alpha_prime(dT, raw_of(iwasawa, ConnectionKind::plus), abelian_cardoso().p1raw);
  CHECK(r.passed);
  CHECK(r.alpha_prime == "-8*t^2");
  CHECK(r.alpha_sign == -1);

  // h3 at t=1 with nabla+ and the abelian instanton.  Independent oracle:
  // dT = -8 e1234, raw difference = -64 + 2 = -62 e1234, so
  // alpha' = 4*(-8)/(-62) = 16/31.
  PresetGeometry h3 = make_preset("h3").bind({{params::id("t"), Rational(1)}});
  HermitianStructure h3h = h3.hermitian();
  KForm dT3 = h3.eqs.d(torsion_3form(h3h));
  CHECK(dT3 == KForm::parse("-8*e1234"));
  KForm raw_plus = pontrjagin_raw(curvature(torsion_connection(h3.eqs, h3h, +1), h3.eqs), h3.eqs).raw;
  CHECK((raw_plus - abelian_cardoso().p1raw) == KForm::parse("-62*e1234"));
  VerificationReport r3 = solve_alpha_prime(dT3, raw_plus, abelian_cardoso().p1raw);
  CHECK(r3.passed);
  CHECK(r3.alpha_prime == "16/31");
  CHECK(r3.alpha_sign == 1);

  // both sides zero: unconstrained
  VerificationReport r0 = solve_alpha_prime(KForm::zero(4), KForm::zero(4), KForm::zero(4));
  CHECK(r0.passed);
  CHECK_FALSE(r0.alpha_prime.has_value());
  CHECK(r0.detail.find("unconstrained") != std::string::npos);

  // vanishing difference but dT != 0: no solution
  VerificationReport r1 = solve_alpha_prime(KForm::parse("e1234"), KForm::parse("e1234"), KForm::parse("e1234"));
  CHECK_FALSE(r1.passed);

  // non-proportional forms: no scalar alpha'
  VerificationReport r2 =
      solve_alpha_prime(KForm::parse("e1234"), KForm::parse("e1234 + e1256"), KForm::zero(4));
  CHECK_FALSE(r2.passed);
  CHECK(r2.detail.find("not proportional") != std::string::npos);

  // polynomial quotient with a definite sign: chern on h2h4h5 vs abelian
  PresetGeometry h245 = make_preset("h2h4h5");
  HermitianStructure h245h = h245.hermitian();
  KForm dT245 = h245.eqs.d(torsion_3form(h245h));
  VerificationReport r4 = solve_alpha_prime(dT245, raw_of(h245, ConnectionKind::chern), abelian_cardoso().p1raw);
  CHECK(r4.passed);
  CHECK(r4.alpha_sign == -1);
  CHECK(r4.alpha_prime == "-24*t^2 - 8*t^2*b^2");
}

TEST_CASE("all fifteen theorem identities verify") {
  for (TheoremId id : all_theorems()) {
    VerificationReport report = verify_theorem(id);
    INFO(report.name, ": ", report.detail);
    CHECK(report.passed);
    CHECK(report.residual_terms == 0);
  }
}

TEST_CASE("theorem grouping by preset") {
  auto h3 = theorems_for_preset("h3");
  REQUIRE(h3.size() == 4);
  CHECK(theorem_name(h3[0]) == "T5.1a");
  CHECK(theorem_name(h3[3]) == "T5.2b");
  CHECK(theorems_for_preset("torus").empty());
  CHECK(all_theorems().size() == 15);
}

TEST_CASE("closedness of the raw Pontrjagin form is asserted") {
  for (const char* name : {"iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    PresetGeometry g = make_preset(name);
    for (ConnectionKind kind :
         {ConnectionKind::levi_civita, ConnectionKind::plus, ConnectionKind::minus, ConnectionKind::chern}) {
      CHECK(g.eqs.d(raw_of(g, kind)).is_zero());
    }
  }
}
