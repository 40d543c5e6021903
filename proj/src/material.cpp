#include "drude/material.hpp"

#include <cmath>

#include "drude/dispersion.hpp"

namespace drude {

std::pair<cplx, cplx> coefficients(const MediumParams& p, cplx zeta,
                                   Side side) {
  if (zeta == cplx(0.0, 0.0))
    throw std::domain_error("coefficients: zeta = 0 is a pole of the Drude law");
  if (side == Side::Minus) return {cplx(p.eps0), cplx(p.mu0)};
  const cplx inv2 = 1.0 / (zeta * zeta);
  return {p.eps0 * (1.0 - p.omega_e * p.omega_e * inv2),
          p.mu0 * (1.0 - p.omega_m * p.omega_m * inv2)};
}

cplx theta_squared(const MediumParams& p, double k, cplx zeta, Side side) {
  const auto [eps, mu] = coefficients(p, zeta, side);
  return k * k - eps * mu * zeta * zeta;
}

cplx theta(const MediumParams& p, double k, cplx zeta, Side side) {
  if (zeta.imag() == 0.0)
    throw std::domain_error(
        "theta: real zeta sits on the branch cut; use theta_limit");
  // Theta stays off R^- for Im(zeta) != 0, so the principal root has
  // positive real part.
  return std::sqrt(theta_squared(p, k, zeta, side));
}

cplx theta_limit(const MediumParams& p, double k, double lambda, Side side,
                 Zone zone) {
  if (lambda == 0.0 || std::abs(std::abs(lambda) - p.omega_m) == 0.0)
    throw std::domain_error("theta_limit: lambda in {0, +-omega_m}");
  const double th2 = theta_squared(p, k, cplx(lambda), side).real();
  const double mag = std::sqrt(std::abs(th2));
  if (side == Side::Minus) {
    if (zone == Zone::DI || zone == Zone::DE || zone == Zone::DD)
      return -iu * sgn(lambda) * mag;
    return cplx(mag);
  }
  if (zone == Zone::EI || zone == Zone::DI) return iu * sgn(lambda) * mag;
  if (zone == Zone::DD) return -iu * sgn(lambda) * mag;
  return cplx(mag);
}

}  // namespace drude
