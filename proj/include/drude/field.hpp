#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "drude/types.hpp"

namespace drude {

/// Uniform grid on [-L, L] with an odd node count so x = 0 is the middle
/// node; the node count is 1 mod 4 so each half-line carries an even number
/// of intervals for Simpson quadrature.
struct Grid1D {
  double L = 12.0;
  int n = 801;
  double h = 0.03;
  int m = 400;  // interface node index, x[m] = 0

  Grid1D() = default;
  Grid1D(double L_, int n_);

  double x(int i) const { return -L + h * i; }
  bool operator==(const Grid1D& o) const { return L == o.L && n == o.n; }
};

/// Simpson weights for one half-line panel; index range [lo, hi] inclusive
/// with an even interval count.
std::vector<double> simpson_weights(int count, double h);

enum Component : int { CE = 0, CHx = 1, CHy = 2, CJ = 3, CKx = 4, CKy = 5 };

/// State U = (E, H_x, H_y, J, K_x, K_y) sampled on a Grid1D. J and K live
/// on x >= 0 and are kept identically zero below the interface. Components
/// that jump at x = 0 store the limit from x > 0 at the interface node; the
/// optional minus_limit carries the limits from x < 0 when they differ.
struct StateField1D {
  Grid1D grid;
  std::array<std::vector<cplx>, 6> comp;
  std::optional<std::array<cplx, 6>> minus_limit;
  bool test_class = false;  // smooth, compactly supported, H_y(0) = 0

  StateField1D() = default;
  explicit StateField1D(const Grid1D& g);

  std::vector<cplx>& operator[](int c) { return comp[c]; }
  const std::vector<cplx>& operator[](int c) const { return comp[c]; }

  cplx at_minus(int c) const {
    return minus_limit ? (*minus_limit)[c] : comp[c][grid.m];
  }

  void zero_below_interface();  // enforce the Pi-extension of J, K
  StateField1D& operator+=(const StateField1D& o);
  StateField1D& operator-=(const StateField1D& o);
  StateField1D& operator*=(cplx a);
};

/// Energy inner product: eps0 (E,E') + mu0 (H,H') + (eps0 omega_e^2)^{-1}
/// (J,J') + (mu0 omega_m^2)^{-1} (K,K'), integrated by Simpson separately
/// on each half-line.
cplx inner_product(const MediumParams& p, const StateField1D& u,
                   const StateField1D& v);
double norm(const MediumParams& p, const StateField1D& u);

/// Scalar weighted L2 pairing of two grid functions (split at the interface,
/// optional distinct minus-side value at the node).
cplx scalar_pair(const Grid1D& g, const std::vector<cplx>& f,
                 const std::vector<cplx>& gbar);

/// First derivative of a grid function computed per half-line (order-6
/// stencils, shifted near the panel ends; no stencil crosses the
/// interface). values[] stores the plus-side derivative at the interface
/// node, minus_at_m the limit from x < 0. f_minus_at_m overrides the
/// function value seen by the minus panel at x = 0.
struct HalfDeriv {
  std::vector<cplx> values;
  cplx minus_at_m;
};
HalfDeriv deriv_halfline(const Grid1D& g, const std::vector<cplx>& f,
                         std::optional<cplx> f_minus_at_m = std::nullopt);

/// Fornberg weights for the d-th derivative at x0 from the given nodes.
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int d);

// ---- test/scenario field builders ----------------------------------------

/// Smooth bump exp(-(x-c)^2/(2 s^2)) tapered to compact support on
/// (c - w, c + w); identically zero outside.
struct Bump {
  double center = 0.0;
  double sigma = 1.0;
  double halfwidth = 4.0;
  double operator()(double x) const;
  double deriv(double x) const;
};

/// Random smooth field of the dense test class D_x: all six components are
/// bump-modulated low-order polynomials, H_y(0) = 0, J/K supported in x > 0.
StateField1D random_test_field(const MediumParams& p, const Grid1D& g,
                               std::uint64_t seed);

/// Divergence-free random field: H and K are built from stream functions
/// (-ik psi, psi') with analytic derivatives, so div_k H = div_k K = 0
/// exactly in the continuum.
StateField1D random_divfree_field(const MediumParams& p, const Grid1D& g,
                                  double k, std::uint64_t seed);

}  // namespace drude
