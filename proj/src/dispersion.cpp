#include "drude/dispersion.hpp"

#include <algorithm>
#include <cmath>

#include "drude/material.hpp"

namespace drude {

const char* zone_name(Zone z) {
  switch (z) {
    case Zone::DD: return "DD";
    case Zone::DE: return "DE";
    case Zone::DI: return "DI";
    case Zone::EI: return "EI";
    case Zone::EE: return "EE";
    case Zone::Boundary: return "Boundary";
    case Zone::PointSpectrum: return "PointSpectrum";
    case Zone::Gap: return "Gap";
  }
  return "?";
}

CutCurves::CutCurves(const MediumParams& p) : p_(p) {
  p_.validate();
  const double oe = p_.omega_e, om = p_.omega_m;
  lambdac_ = oe * om / std::sqrt(oe * oe + om * om);
  kc_ = std::sqrt(p_.eps0 * p_.mu0) * lambdac_;
}

double CutCurves::lambda0(double k) const {
  return std::abs(k) / std::sqrt(p_.eps0 * p_.mu0);
}

double CutCurves::lambdaD(double k) const {
  const double em = p_.eps0 * p_.mu0;
  const double a = k * k / (2.0 * em);
  const double oe2 = p_.omega_e * p_.omega_e, om2 = p_.omega_m * p_.omega_m;
  const double rad =
      std::sqrt((a + 0.5 * (oe2 - om2)) * (a + 0.5 * (oe2 - om2)) +
                k * k * om2 / em);
  return std::sqrt(a + 0.5 * (oe2 + om2) + rad);
}

double CutCurves::lambdaI(double k) const {
  // lambda_I * lambda_D = omega_e * omega_m; dividing avoids the
  // cancellation in the direct radical for large k.
  return p_.omega_e * p_.omega_m / lambdaD(k);
}

double CutCurves::lambdaE(double k) const {
  const double K = p_.big_k();
  if (std::abs(k) < kc_)
    throw std::domain_error("lambdaE: defined for |k| >= k_c only");
  if (K == 0.0) return p_.omega_m / std::sqrt(2.0);
  // X = 1/2 + k^2/K - sgn(K) sqrt(1/4 + k^4/K^2), written to avoid the
  // large-k cancellation.
  const double r = k * k / std::abs(K);
  const double root = std::sqrt(0.25 + r * r);
  const double x = 0.5 - sgn(K) * 0.25 / (root + r);
  return p_.omega_m * std::sqrt(x);
}

CutCurves cut_curves(const MediumParams& p) { return CutCurves(p); }

double q_polynomial(const MediumParams& p, double k, double x) {
  const double K = p.big_k();
  const double om2 = p.omega_m * p.omega_m;
  return K * x * x - om2 * (2.0 * k * k + K) * x + k * k * om2 * om2;
}

double default_classify_tol(double lambda) {
  return 1e-9 * (1.0 + std::abs(lambda));
}

PointEigenvalue point_eigenvalue(const MediumParams& p, double lambda,
                                 double tol) {
  if (tol < 0.0) tol = default_classify_tol(lambda);
  if (std::abs(lambda) <= tol) return PointEigenvalue::Zero;
  return lambda > 0.0 ? PointEigenvalue::PlusOmegaM
                      : PointEigenvalue::MinusOmegaM;
}

Zone classify(const MediumParams& p, double k, double lambda, double tol) {
  if (tol < 0.0) tol = default_classify_tol(lambda);
  const CutCurves c(p);
  const double ak = std::abs(k), al = std::abs(lambda);

  const bool on_omega_m = std::abs(al - p.omega_m) <= tol;
  // Degenerate touching point lambda_I = lambda_D at k = 0 when
  // omega_e = omega_m: treated as a cut point, not an eigenvalue line.
  if (on_omega_m && p.omega_e == p.omega_m && ak <= tol) return Zone::Boundary;
  if (al <= tol || on_omega_m) return Zone::PointSpectrum;

  const bool near_kc = std::abs(ak - c.kc()) <= tol;
  if (near_kc && std::abs(al - c.lambdac()) <= tol) return Zone::Boundary;

  const double l0 = c.lambda0(k), lD = c.lambdaD(k), lI = c.lambdaI(k);
  if (std::abs(al - l0) <= tol || std::abs(al - lD) <= tol ||
      std::abs(al - lI) <= tol)
    return Zone::Boundary;

  if (ak > c.kc() && !near_kc && std::abs(al - c.lambdaE(k)) <= tol)
    return Zone::EE;

  if (al > lD) return Zone::DD;
  if (al > std::max(l0, lI) && al < lD) return Zone::DE;
  if (ak < c.kc() && al > l0 && al < lI) return Zone::DI;
  if (al < std::min(l0, lI)) return Zone::EI;
  return Zone::Gap;
}

WaveKind wave_taxonomy(const MediumParams& p, double k, double lambda,
                       Side side) {
  const Zone z = classify(p, k, lambda);
  if (!is_open_zone(z))
    throw std::domain_error("wave_taxonomy: (k,lambda) must lie in an open zone");
  const double th2 =
      theta_squared(p, k, cplx(lambda), side).real();
  if (th2 > 0.0) return WaveKind::Evanescent;
  if (side == Side::Minus) return WaveKind::Direct;  // v_phi v_g = 1/(eps0 mu0)
  const auto [eps, mu] = coefficients(p, cplx(lambda), Side::Plus);
  const double l2 = lambda * lambda;
  const double denom =
      p.mu0 * (1.0 + p.omega_m * p.omega_m / l2) * eps.real() +
      p.eps0 * (1.0 + p.omega_e * p.omega_e / l2) * mu.real();
  return (2.0 * lambda / denom > 0.0) ? WaveKind::Direct : WaveKind::Inverse;
}

std::vector<ZoneInterval> zone_sections_positive(const MediumParams& p,
                                                 double k, double lambda_max) {
  const CutCurves c(p);
  const double l0 = c.lambda0(k), lD = c.lambdaD(k), lI = c.lambdaI(k);
  std::vector<ZoneInterval> out;

  const double ei_hi = std::min(l0, lI);
  if (ei_hi > 0.0) out.push_back({Zone::EI, 0.0, ei_hi});

  if (std::abs(k) < c.kc() && l0 < lI) out.push_back({Zone::DI, l0, lI});

  const double de_lo = std::max(l0, lI);
  if (de_lo < lD) {
    if (p.omega_m > de_lo && p.omega_m < lD) {
      out.push_back({Zone::DE, de_lo, p.omega_m});
      out.push_back({Zone::DE, p.omega_m, lD});
    } else {
      out.push_back({Zone::DE, de_lo, lD});
    }
  }

  if (lambda_max > lD) out.push_back({Zone::DD, lD, lambda_max});
  return out;
}

}  // namespace drude
