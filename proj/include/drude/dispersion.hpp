#pragma once

#include <optional>
#include <vector>

#include "drude/types.hpp"

namespace drude {

/// Classification of a point of the (k,lambda) plane. DD/DE/DI/EI are the
/// open 2D zones (first letter: vacuum side, second: Drude side; D=direct
/// propagative, I=inverse propagative, E=evanescent). EE is the 1D plasmon
/// curve, PointSpectrum the eigenvalue lines lambda in {0,+-omega_m},
/// Boundary the spectral cuts and critical points, Gap the rest.
enum class Zone {
  DD,
  DE,
  DI,
  EI,
  EE,
  Boundary,
  PointSpectrum,
  Gap,
};

inline bool is_open_zone(Zone z) {
  return z == Zone::DD || z == Zone::DE || z == Zone::DI || z == Zone::EI;
}

const char* zone_name(Zone z);

/// Which eigenvalue line a PointSpectrum classification hit.
enum class PointEigenvalue { Zero, PlusOmegaM, MinusOmegaM };

/// The cut curves lambda_0 (vacuum), lambda_D / lambda_I (Drude) and the
/// plasmon curve lambda_E, together with the critical point (k_c, lambda_c)
/// where lambda_0, lambda_I and lambda_E meet.
class CutCurves {
 public:
  explicit CutCurves(const MediumParams& p);

  double lambda0(double k) const;
  double lambdaD(double k) const;
  double lambdaI(double k) const;
  /// Defined for |k| >= k_c only; throws std::domain_error below that.
  double lambdaE(double k) const;

  double kc() const { return kc_; }
  double lambdac() const { return lambdac_; }

 private:
  MediumParams p_;
  double kc_ = 0.0;
  double lambdac_ = 0.0;
};

CutCurves cut_curves(const MediumParams& p);

/// Q_k(X) = K X^2 - omega_m^2 (2k^2 + K) X + k^2 omega_m^4, whose positive
/// root in (0, omega_m^2) is lambda_E(k)^2.
double q_polynomial(const MediumParams& p, double k, double x);

double default_classify_tol(double lambda);

/// Zone membership of (k,lambda) with snapping half-width `tol` around the
/// curves and eigenvalue lines.
Zone classify(const MediumParams& p, double k, double lambda,
              double tol = -1.0);

/// Point-spectrum line hit by (k,lambda); meaningful only when classify
/// returned PointSpectrum.
PointEigenvalue point_eigenvalue(const MediumParams& p, double lambda,
                                 double tol = -1.0);

enum class WaveKind { Direct, Inverse, Evanescent };

/// Propagation character of the elementary waves on one side of the
/// interface at an open-zone point: evanescent when Theta > 0 there,
/// otherwise direct/inverse by the sign of v_phi * v_g.
WaveKind wave_taxonomy(const MediumParams& p, double k, double lambda,
                       Side side);

/// One maximal open lambda-interval of a zone section at fixed k.
struct ZoneInterval {
  Zone zone;
  double lo;
  double hi;
};

/// The positive-lambda intervals of the absolutely continuous spectrum at
/// fixed k, ordered increasingly, with DE split at omega_m when the pole
/// falls inside. DD is truncated at lambda_max.
std::vector<ZoneInterval> zone_sections_positive(const MediumParams& p,
                                                 double k, double lambda_max);

}  // namespace drude
