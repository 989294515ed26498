#include "nilflux/eom.hpp"

#include <stdexcept>

namespace nilflux {

bool is_one_one_curvature(const CurvatureTensor4& R, const HermitianStructure& h) {
  for (int m = 1; m <= kDim; ++m)
    for (int n = 1; n <= kDim; ++n)
      for (int a = 1; a <= kDim; ++a)
        for (int b = 1; b <= kDim; ++b) {
          Scalar lhs;
          for (int s = 1; s <= kDim; ++s) {
            const Scalar& jsm = h.J.entry(s, m);
            if (jsm.is_zero()) continue;
            for (int p = 1; p <= kDim; ++p) {
              const Scalar& jpn = h.J.entry(p, n);
              if (jpn.is_zero()) continue;
              lhs += jsm * jpn * R.at(s, p, a, b);
            }
          }
          if (lhs != R.at(m, n, a, b)) return false;
        }
  return true;
}

namespace {

/// P_{(ms),(pq)} = sum_{ab} R_{msab} R_{pqab}
std::array<Scalar, kDim * kDim * kDim * kDim> pair_contractions(const CurvatureTensor4& R) {
  std::array<Scalar, kDim * kDim * kDim * kDim> out;
  for (int m = 1; m <= kDim; ++m)
    for (int s = 1; s <= kDim; ++s)
      for (int p = 1; p <= kDim; ++p)
        for (int q = 1; q <= kDim; ++q) {
          Scalar sum;
          for (int a = 1; a <= kDim; ++a)
            for (int b = 1; b <= kDim; ++b) {
              const Scalar& x = R.at(m, s, a, b);
              if (x.is_zero()) continue;
              sum += x * R.at(p, q, a, b);
            }
          out[static_cast<size_t>((((m - 1) * kDim + (s - 1)) * kDim + (p - 1)) * kDim + (q - 1))] = std::move(sum);
        }
  return out;
}

}  // namespace

bool identity_15_check(const CurvatureTensor4& R, const HermitianStructure& h) {
  auto P = pair_contractions(R);
  auto p_at = [&](int m, int s, int p, int q) -> const Scalar& {
    return P[static_cast<size_t>((((m - 1) * kDim + (s - 1)) * kDim + (p - 1)) * kDim + (q - 1))];
  };
  // F^{pq} component table
  std::array<std::array<Scalar, kDim>, kDim> f;
  for (int p = 1; p <= kDim; ++p)
    for (int q = 1; q <= kDim; ++q) {
      const int args[2] = {p, q};
      f[static_cast<size_t>(p - 1)][static_cast<size_t>(q - 1)] = h.F.component(args);
    }
  Rational half(1, 2);
  for (int m = 1; m <= kDim; ++m) {
    for (int n = 1; n <= kDim; ++n) {
      Scalar lhs;
      for (int s = 1; s <= kDim; ++s) {
        const Scalar& jsn = h.J.entry(s, n);
        if (jsn.is_zero()) continue;
        for (int p = 1; p <= kDim; ++p) {
          for (int q = 1; q <= kDim; ++q) {
            const Scalar& fpq = f[static_cast<size_t>(p - 1)][static_cast<size_t>(q - 1)];
            if (fpq.is_zero()) continue;
            Scalar bracket = p_at(m, s, p, q) + p_at(m, p, q, s) + p_at(m, q, s, p);
            lhs += bracket * fpq * jsn;
          }
        }
      }
      lhs = lhs * half;
      Scalar rhs;
      for (int p = 1; p <= kDim; ++p)
        for (int q = 1; q <= kDim; ++q)
          for (int r = 1; r <= kDim; ++r) {
            const Scalar& x = R.at(m, p, q, r);
            if (x.is_zero()) continue;
            rhs += x * R.at(n, p, q, r);
          }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Identity16Result identity_16_check(const CurvatureTensor4& R, const HermitianStructure& h) {
  if (!is_one_one_curvature(R, h)) return Identity16Result::not_applicable;
  for (int m = 1; m <= kDim; ++m) {
    for (int j = 1; j <= kDim; ++j) {
      Scalar sum;
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) {
          const int args[2] = {k, l};
          Scalar fkl = h.F.component(args);
          if (fkl.is_zero()) continue;
          for (int a = 1; a <= kDim; ++a)
            for (int b = 1; b <= kDim; ++b) {
              const Scalar& x = R.at(m, j, a, b);
              if (x.is_zero()) continue;
              sum += x * R.at(k, l, a, b) * fkl;
            }
        }
      if (!sum.is_zero()) return Identity16Result::fails;
    }
  }
  return Identity16Result::holds;
}

MotionConfiguration MotionConfiguration::make(std::string label, PresetGeometry geometry, InstantonBundle instanton,
                                              Connection r_connection, Rational alpha_prime) {
  HermitianStructure h = geometry.hermitian();
  KForm flux = torsion_3form(h);
  Curvature r_curv = curvature(r_connection, geometry.eqs);
  return MotionConfiguration{std::move(label),        std::move(geometry), std::move(flux), std::move(instanton),
                             std::move(r_connection), std::move(r_curv),   std::move(alpha_prime)};
}

VerificationReport equations_of_motion_check(const MotionConfiguration& cfg) {
  VerificationReport report;
  report.name = cfg.label;
  const StructureEquations& eqs = cfg.geometry.eqs;
  HermitianStructure h = cfg.geometry.hermitian();

  RicciTensor ric_g = ricci(curvature(levi_civita(eqs), eqs));
  CurvatureTensor4 r4 = CurvatureTensor4::from(cfg.r_curvature);
  Rational quarter(1, 4);
  Scalar alpha_over_4(cfg.alpha_prime * quarter);

  // R-term square with endomorphism pairs single-counted
  auto r_square = [&](int i, int j) {
    Scalar sum;
    for (int a = 1; a <= kDim; ++a)
      for (int b = a + 1; b <= kDim; ++b)
        for (int m = 1; m <= kDim; ++m) {
          const Scalar& x = r4.at(i, m, a, b);
          if (x.is_zero()) continue;
          sum += x * r4.at(j, m, a, b);
        }
    return sum;
  };

  std::string failures;
  auto record_failure = [&failures](const std::string& what) {
    if (!failures.empty()) failures += "; ";
    failures += what;
  };

  // (i) gravitino/Einstein equation
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      Scalar h_square;
      for (int m = 1; m <= kDim; ++m)
        for (int n = 1; n <= kDim; ++n) {
          const int a1[3] = {i, m, n};
          const int a2[3] = {j, m, n};
          Scalar x = cfg.H.component(a1);
          if (x.is_zero()) continue;
          h_square += x * cfg.H.component(a2);
        }
      const Scalar& f_square = cfg.instanton.quadratic[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      Scalar residual =
          ric_g.at(i, j) - h_square * quarter - alpha_over_4 * (f_square - r_square(i, j));
      if (!residual.is_zero()) {
        record_failure("(i) fails at (" + std::to_string(i) + "," + std::to_string(j) +
                       "): residual = " + residual.str());
        i = kDim;  // one witness suffices
        break;
      }
    }
  }

  // (ii) flux conservation: Levi-Civita divergence of H
  Connection conn_g = levi_civita(eqs);
  for (int j = 1; j <= kDim; ++j) {
    for (int k = j + 1; k <= kDim; ++k) {
      Scalar divergence;
      for (int i = 1; i <= kDim; ++i) {
        const int args[3] = {i, j, k};
        divergence += covariant_derivative(conn_g, cfg.H, i, args);
      }
      if (!divergence.is_zero()) {
        record_failure("(ii) fails at (" + std::to_string(j) + "," + std::to_string(k) + ")");
        j = kDim;
        break;
      }
    }
  }

  // (iii) gauge field equation: ∇+ divergence of F^A
  Connection conn_plus = torsion_connection(eqs, h, +1);
  bool flagged_reconstruction = false;
  if (cfg.instanton.kind == InstantonKind::abelian_cardoso) {
    // Connection part on each invariant representative; the derivative part
    // vanishes by the profile equations of the abelian configuration.
    flagged_reconstruction = true;
    for (const KForm& rep : cfg.instanton.curvature_forms) {
      for (int j = 1; j <= kDim; ++j) {
        Scalar divergence;
        for (int i = 1; i <= kDim; ++i) {
          const int args[2] = {i, j};
          divergence += covariant_derivative(conn_plus, rep, i, args);
        }
        if (!divergence.is_zero()) {
          record_failure("(iii) fails at j=" + std::to_string(j));
          break;
        }
      }
    }
  } else {
    CurvatureTensor4 f4 = CurvatureTensor4::from(cfg.instanton.curvature);
    for (int j = 1; j <= kDim && failures.find("(iii)") == std::string::npos; ++j) {
      for (int a = 1; a <= kDim; ++a) {
        for (int b = 1; b <= kDim; ++b) {
          Scalar divergence;
          for (int i = 1; i <= kDim; ++i) {
            const int iarg[1] = {i};
            // form-index part through ∇+
            for (int m = 1; m <= kDim; ++m) {
              Scalar w_mi = conn_plus.form(m, i).component(iarg);
              if (!w_mi.is_zero()) divergence -= w_mi * f4.at(m, j, a, b);
              Scalar w_mj = conn_plus.form(m, j).component(iarg);
              if (!w_mj.is_zero()) divergence -= w_mj * f4.at(i, m, a, b);
            }
            // gauge part through the instanton's own connection
            for (int c = 1; c <= kDim; ++c) {
              Scalar s_ac = cfg.instanton.connection.form(a, c).component(iarg);
              if (!s_ac.is_zero()) divergence += s_ac * f4.at(i, j, c, b);
              Scalar s_cb = cfg.instanton.connection.form(c, b).component(iarg);
              if (!s_cb.is_zero()) divergence -= f4.at(i, j, a, c) * s_cb;
            }
          }
          if (!divergence.is_zero()) {
            record_failure("(iii) fails at (j,a,b)=(" + std::to_string(j) + "," + std::to_string(a) + "," +
                           std::to_string(b) + ")");
            a = b = kDim;
          }
        }
      }
    }
  }

  report.passed = failures.empty();
  report.alpha_prime = rational_str(cfg.alpha_prime);
  report.alpha_sign = cfg.alpha_prime > 0 ? 1 : (cfg.alpha_prime < 0 ? -1 : 0);
  if (report.passed) {
    report.detail = "equations (i)-(iii) hold exactly at alpha' = " + rational_str(cfg.alpha_prime);
  } else {
    report.detail = failures;
  }
  if (flagged_reconstruction)
    report.detail +=
        " [abelian instanton: quadratic term reconstructed from the trace normalization; derivative part of (iii) "
        "rests on the instanton profile equations]";
  return report;
}

}  // namespace nilflux
