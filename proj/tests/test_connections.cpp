#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilflux/connections.hpp"

using namespace nilflux;

namespace {

// ---------------------------------------------------------------------------
// Independent Ricci oracle: Koszul formula on brackets -> frame covariant
// derivatives -> curvature operator -> Ricci contraction.  Shares no code
// with the connection-form pipeline it checks.
// ---------------------------------------------------------------------------

struct KoszulOracle {
  const StructureEquations& eqs;

  // ∇_{E_i} E_j from 2 g(∇_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)
  FrameVector nabla(int i, int j) const {
    FrameVector out;
    FrameVector ei = FrameVector::basis(i);
    FrameVector ej = FrameVector::basis(j);
    for (int z = 1; z <= kDim; ++z) {
      FrameVector ez = FrameVector::basis(z);
      Scalar value = eqs.bracket(ei, ej)[z] - eqs.bracket(ej, ez)[i] + eqs.bracket(ez, ei)[j];
      out[z] = value * Rational(1, 2);
    }
    return out;
  }

  FrameVector nabla_vec(int i, const FrameVector& v) const {
    FrameVector out;
    for (int j = 1; j <= kDim; ++j) {
      if (v[j].is_zero()) continue;
      out += nabla(i, j) * v[j];
    }
    return out;
  }

  // R(E_i, E_j) E_k = ∇_i ∇_j E_k - ∇_j ∇_i E_k - ∇_{[E_i,E_j]} E_k
  FrameVector riemann(int i, int j, int k) const {
    FrameVector out = nabla_vec(i, nabla(j, k));
    out += -nabla_vec(j, nabla(i, k));
    FrameVector bracket = eqs.bracket(FrameVector::basis(i), FrameVector::basis(j));
    for (int m = 1; m <= kDim; ++m) {
      if (bracket[m].is_zero()) continue;
      out += -(nabla(m, k) * bracket[m]);
    }
    return out;
  }

  Scalar ricci(int m, int n) const {
    Scalar sum;
    for (int i = 1; i <= kDim; ++i) sum += riemann(i, m, n)[i];
    return sum;
  }
};

}  // namespace

TEST_CASE("Levi-Civita connection and curvature") {
  PresetGeometry iwasawa = make_preset("iwasawa");
  Curvature curv = curvature(levi_civita(iwasawa.eqs), iwasawa.eqs);
  CHECK(curv.form(1, 2) == KForm::parse("1/2*t^2*e34 - 1/2*t^2*e56"));

  PresetGeometry h3 = make_preset("h3");
  Curvature curv_h3 = curvature(levi_civita(h3.eqs), h3.eqs);
  CHECK(curv_h3.form(1, 2) == KForm::parse("-3*t^2*e12 + 2*t^2*e34"));

  // abelian torus is flat
  StructureEquations flat;
  Connection lc = levi_civita(flat);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) CHECK(lc.form(i, j).is_zero());
  CHECK(curvature(lc, flat).is_zero());
}

TEST_CASE("torsion connections") {
  PresetGeometry h3 = make_preset("h3");
  HermitianStructure h = h3.hermitian();
  Curvature plus = curvature(torsion_connection(h3.eqs, h, +1), h3.eqs);
  CHECK(plus.form(1, 2) == KForm::parse("-4*t^2*e12 + 4*t^2*e34"));
  CHECK(plus.form(3, 4) == -plus.form(1, 2));

  PresetGeometry iwasawa = make_preset("iwasawa");
  HermitianStructure hi = iwasawa.hermitian();
  Curvature minus = curvature(torsion_connection(iwasawa.eqs, hi, -1), iwasawa.eqs);
  CHECK(minus.form(1, 2) == KForm::parse("-2*t^2*e56"));
  CHECK(minus.form(3, 4) == KForm::parse("-2*t^2*e56"));

  PresetGeometry torus = make_preset("torus");
  HermitianStructure ht = torus.hermitian();
  for (int sign : {+1, -1}) {
    Connection c = torsion_connection(torus.eqs, ht, sign);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) CHECK(c.form(i, j).is_zero());
  }

  CHECK_THROWS_AS(torsion_connection(h3.eqs, h, 2), std::invalid_argument);
}

TEST_CASE("the two torsion connections differ by the torsion 3-form") {
  for (const char* name : {"iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    PresetGeometry g = make_preset(name);
    HermitianStructure h = g.hermitian();
    KForm T = torsion_3form(h);
    Connection plus = torsion_connection(g.eqs, h, +1);
    Connection minus = torsion_connection(g.eqs, h, -1);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        for (int k = 1; k <= kDim; ++k) {
          const int karg[1] = {k};
          const int targ[3] = {k, j, i};
          Scalar diff = plus.form(i, j).component(karg) - minus.form(i, j).component(karg);
          CHECK(diff == T.component(targ));
        }
  }
}

TEST_CASE("Chern connection") {
  PresetGeometry iwasawa = make_preset("iwasawa");
  Curvature chern_curv = curvature(chern(iwasawa.eqs, iwasawa.hermitian()), iwasawa.eqs);
  CHECK(chern_curv.is_zero());

  PresetGeometry h19 = make_preset("h19minus");
  Curvature chern_h19 = curvature(chern(h19.eqs, h19.hermitian()), h19.eqs);
  CHECK(chern_h19.form(1, 2) == KForm::parse("-2*e34 - 2*e56"));

  PresetGeometry torus = make_preset("torus");
  CHECK(curvature(chern(torus.eqs, torus.hermitian()), torus.eqs).is_zero());
}

TEST_CASE("curvature examples from the h6 and h2h4h5 tables") {
  PresetGeometry h6 = make_preset("h6");
  Curvature plus_h6 = curvature(torsion_connection(h6.eqs, h6.hermitian(), +1), h6.eqs);
  CHECK(plus_h6.form(1, 2) == KForm::parse("2*t^2*e34 + 2*t^2*e56"));

  PresetGeometry h245 = make_preset("h2h4h5");
  Curvature plus_h245 = curvature(torsion_connection(h245.eqs, h245.hermitian(), +1), h245.eqs);
  CHECK(plus_h245.form(5, 6) == KForm::parse("-2*t^2*e12 - 2*t^2*e34"));
  CHECK(plus_h245.form(5, 6) == -plus_h245.form(1, 2) - plus_h245.form(3, 4));
}

TEST_CASE("connection and curvature antisymmetry on every preset") {
  for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    PresetGeometry g = make_preset(name);
    HermitianStructure h = g.hermitian();
    for (ConnectionKind kind :
         {ConnectionKind::levi_civita, ConnectionKind::plus, ConnectionKind::minus, ConnectionKind::chern}) {
      Connection c;
      switch (kind) {
        case ConnectionKind::levi_civita: c = levi_civita(g.eqs); break;
        case ConnectionKind::plus: c = torsion_connection(g.eqs, h, +1); break;
        case ConnectionKind::minus: c = torsion_connection(g.eqs, h, -1); break;
        case ConnectionKind::chern: c = chern(g.eqs, h); break;
        default: continue;
      }
      CHECK(c.antisymmetric());
      CHECK(curvature(c, g.eqs).antisymmetric());
    }
  }
}

TEST_CASE("first Bianchi identity for the Levi-Civita connection") {
  for (const char* name : {"iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    PresetGeometry g = make_preset(name);
    CurvatureTensor4 r = CurvatureTensor4::from(curvature(levi_civita(g.eqs), g.eqs));
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        for (int k = 1; k <= kDim; ++k)
          for (int l = 1; l <= kDim; ++l)
            CHECK((r.at(i, j, k, l) + r.at(j, k, i, l) + r.at(k, i, j, l)).is_zero());
  }
}

TEST_CASE("Ricci tensor against the Koszul-formula oracle") {
  // flat torus
  CHECK(ricci(curvature(levi_civita(StructureEquations()), StructureEquations())).symmetric());

  for (const char* name : {"iwasawa", "h3", "h19minus"}) {
    PresetGeometry g = make_preset(name);
    RicciTensor ric = ricci(curvature(levi_civita(g.eqs), g.eqs));
    CHECK(ric.symmetric());
    KoszulOracle oracle{g.eqs};
    for (int m = 1; m <= kDim; ++m)
      for (int n = 1; n <= kDim; ++n) CHECK(ric.at(m, n) == oracle.ricci(m, n));
  }

  // classical nilmanifold values on h3: base directions -2t^2, fiber +4t^2
  PresetGeometry h3 = make_preset("h3");
  RicciTensor ric = ricci(curvature(levi_civita(h3.eqs), h3.eqs));
  Scalar t2 = Scalar::param("t", 2);
  CHECK(ric.at(1, 1) == Scalar(-2) * t2);
  CHECK(ric.at(5, 5).is_zero());
  CHECK(ric.at(6, 6) == Scalar(4) * t2);
}

TEST_CASE("structural identities hold on every preset") {
  for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    for (const VerificationReport& report : structural_identities(make_preset(name))) {
      INFO(report.name, ": ", report.detail);
      CHECK(report.passed);
    }
  }
}

TEST_CASE("holonomy condition for nabla+ on the balanced presets") {
  for (const char* name : {"torus", "iwasawa", "h3", "h2h4h5", "h6", "h19minus"}) {
    PresetGeometry g = make_preset(name);
    HermitianStructure h = g.hermitian();
    Curvature plus = curvature(torsion_connection(g.eqs, h, +1), g.eqs);
    CHECK(holonomy_trace(plus, g.J).is_zero());
    // printed form of the condition
    CHECK(plus.form(5, 6) == -plus.form(1, 2) - plus.form(3, 4));
  }
}

TEST_CASE("nabla+ parallelizes its torsion on h3") {
  PresetGeometry g = make_preset("h3");
  HermitianStructure h = g.hermitian();
  KForm T = torsion_3form(h);
  Connection plus = torsion_connection(g.eqs, h, +1);
  for (int k = 1; k <= kDim; ++k)
    for (int a = 1; a <= kDim; ++a)
      for (int b = a + 1; b <= kDim; ++b)
        for (int c = b + 1; c <= kDim; ++c) {
          const int args[3] = {a, b, c};
          CHECK(covariant_derivative(plus, T, k, args).is_zero());
        }
}
