#pragma once

#include "drude/types.hpp"

namespace drude {

enum class Zone;  // see dispersion.hpp

/// Frequency-dependent material coefficients (eps, mu) of the half-space
/// `side` at spectral parameter zeta. The Drude side has 1/zeta^2 poles,
/// so zeta = 0 is rejected.
std::pair<cplx, cplx> coefficients(const MediumParams& p, cplx zeta, Side side);

/// Theta = k^2 - eps*mu*zeta^2 on the given side. Never lies on the
/// negative real axis when Im(zeta) != 0.
cplx theta_squared(const MediumParams& p, double k, cplx zeta, Side side);

/// Principal square root of Theta; Re(theta) > 0 off the real axis.
/// Real zeta must go through theta_limit instead.
cplx theta(const MediumParams& p, double k, cplx zeta, Side side);

/// One-sided limit of theta as zeta -> lambda from the upper half-plane.
/// The zone decides which side of the branch cut the limit lands on; it
/// must come from classify() so boundary tie-breaking lives in one place.
cplx theta_limit(const MediumParams& p, double k, double lambda, Side side,
                 Zone zone);

}  // namespace drude
