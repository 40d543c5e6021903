#pragma once

#include "drude/dispersion.hpp"
#include "drude/field.hpp"
#include "drude/types.hpp"

namespace drude {

/// Per-(k,zeta) interface data: one-sided coefficients, exponents theta+-,
/// the psi expansion coefficients A/B and the Wronskian. Built either off
/// the real axis (principal square root) or as the upper half-plane limit
/// at real lambda (zone-resolved branch).
struct SturmData {
  MediumParams p;
  double k = 0.0;
  cplx zeta;
  cplx eps_m, eps_p, mu_m, mu_p;
  cplx theta_m, theta_p;
  cplx wronskian;
  cplx a_minus, b_minus;  // psi_{-1} on x>0: A e^{+theta_p x} + B e^{-theta_p x}
  cplx a_plus, b_plus;    // psi_{+1} on x<0: A e^{-theta_m x} + B e^{+theta_m x}

  cplx eps(Side s) const { return s == Side::Minus ? eps_m : eps_p; }
  cplx mu(Side s) const { return s == Side::Minus ? mu_m : mu_p; }
  cplx theta(Side s) const { return s == Side::Minus ? theta_m : theta_p; }
  cplx mu_at(double x) const { return x < 0.0 ? mu_m : mu_p; }
};

/// Off-axis construction, Im(zeta) != 0.
SturmData sturm_data(const MediumParams& p, double k, cplx zeta);

/// Real-axis limit; the zone defaults to classify(k,lambda).
SturmData sturm_data_limit(const MediumParams& p, double k, double lambda);
SturmData sturm_data_limit(const MediumParams& p, double k, double lambda,
                           Zone zone);

/// Homogeneous basis c = cosh(theta x), s = mu sinh(theta x)/theta; both
/// are entire in Theta, evaluated by an even power series near theta x = 0.
std::pair<cplx, cplx> basis_cs(const SturmData& d, double x);

/// The decaying solutions psi_{k,zeta,+-1} and their x-derivative,
/// evaluated from the piecewise-exponential closed form. At x = 0 the
/// derivative takes the limit from the side given by `side_at0`.
cplx psi(const SturmData& d, int branch, double x);
cplx psi_deriv(const SturmData& d, int branch, double x, Side side_at0);

struct GreenEval {
  cplx value;
  cplx wronskian;
};

/// Green function g(x,x') = psi_-(min) psi_+(max) / W.
GreenEval green(const SturmData& d, double x, double xp);

/// Scalarizer S_{k,zeta}: maps a state to the Sturm-Liouville right-hand
/// side scalar; stores the one-sided minus limit at the interface node.
HalfDeriv scalarize(const SturmData& d, const StateField1D& F);

/// Vectorizer V_{k,zeta} applied to a scalar grid function (derivatives by
/// the half-line FD stencils).
StateField1D v_apply(const SturmData& d, const std::vector<cplx>& E,
                     const Grid1D& g);

/// Multiplier part T_{k,zeta} of the resolvent (zero E-component).
StateField1D t_apply(const SturmData& d, const StateField1D& F);

/// Quadratic form (R_k(zeta) U, U)_1D = (T U, U) + iint zeta g(x,x')
/// (S_zeta U)(x) conj((S_zetabar U)(x')) dx dx' by tensor quadrature over
/// the support of U.
cplx resolvent_quadform(const MediumParams& p, double k, cplx zeta,
                        const StateField1D& U);

/// (1/pi) Im(lambda g_{k,lambda}(x,x')) in the open zones.
double green_imag_limit(const MediumParams& p, double k, double lambda,
                        double x, double xp);

/// Normalized plasmon profile w_{k,lambda,0}(x) on the EE curve.
double plasmon_residue(const MediumParams& p, double k, double lambda,
                       double x);

/// Decay exponents and normalization of w_{k,lambda,0}; factored out so the
/// mode layer can reuse them.
struct PlasmonProfile {
  double norm_const;
  double theta_m, theta_p;
};
PlasmonProfile plasmon_profile(const MediumParams& p, double k, double lambda);

}  // namespace drude
