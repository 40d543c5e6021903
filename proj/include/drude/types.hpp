#pragma once

#include <complex>
#include <stdexcept>

namespace drude {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;
inline const cplx iu{0.0, 1.0};

/// Which half-space a point belongs to: vacuum fills x<0, the Drude
/// material fills x>0.
enum class Side { Minus, Plus };

inline Side side_of(double x) { return x < 0.0 ? Side::Minus : Side::Plus; }

inline double sgn(double v) { return v < 0.0 ? -1.0 : (v > 0.0 ? 1.0 : 0.0); }

/// Physical constants of the two half-spaces. eps0/mu0 are the vacuum
/// coefficients, omega_e/omega_m the electric and magnetic plasma
/// frequencies of the Drude half-space.
struct MediumParams {
  double eps0 = 1.0;
  double mu0 = 1.0;
  double omega_e = 1.0;
  double omega_m = 1.0;

  MediumParams() = default;
  MediumParams(double e0, double m0, double oe, double om)
      : eps0(e0), mu0(m0), omega_e(oe), omega_m(om) {
    validate();
  }

  void validate() const {
    auto ok = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!ok(eps0)) throw std::invalid_argument("eps0 must be positive");
    if (!ok(mu0)) throw std::invalid_argument("mu0 must be positive");
    if (!ok(omega_e)) throw std::invalid_argument("omega_e must be positive");
    if (!ok(omega_m)) throw std::invalid_argument("omega_m must be positive");
  }

  /// K = eps0*mu0*(omega_m^2 - omega_e^2); controls the plasmon curve shape.
  double big_k() const {
    return eps0 * mu0 * (omega_m * omega_m - omega_e * omega_e);
  }
};

}  // namespace drude
