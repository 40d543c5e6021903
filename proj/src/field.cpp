#include "drude/field.hpp"

#include <cmath>
#include <random>

namespace drude {

Grid1D::Grid1D(double L_, int n_) : L(L_), n(n_) {
  if (n < 9 || n % 4 != 1)
    throw std::invalid_argument("Grid1D: node count must be 1 mod 4 and >= 9");
  if (!(L > 0.0)) throw std::invalid_argument("Grid1D: L must be positive");
  h = 2.0 * L / (n - 1);
  m = (n - 1) / 2;
}

std::vector<double> simpson_weights(int count, double h) {
  if (count < 3 || count % 2 == 0)
    throw std::invalid_argument("simpson_weights: need odd node count");
  std::vector<double> w(count, h / 3.0);
  for (int i = 1; i < count - 1; ++i) w[i] = (i % 2 ? 4.0 : 2.0) * h / 3.0;
  return w;
}

StateField1D::StateField1D(const Grid1D& g) : grid(g) {
  for (auto& c : comp) c.assign(g.n, cplx(0.0));
}

void StateField1D::zero_below_interface() {
  for (int c : {CJ, CKx, CKy})
    for (int i = 0; i < grid.m; ++i) comp[c][i] = 0.0;
  if (minus_limit)
    for (int c : {CJ, CKx, CKy}) (*minus_limit)[c] = 0.0;
}

StateField1D& StateField1D::operator+=(const StateField1D& o) {
  for (int c = 0; c < 6; ++c)
    for (int i = 0; i < grid.n; ++i) comp[c][i] += o.comp[c][i];
  if (minus_limit || o.minus_limit) {
    std::array<cplx, 6> ml;
    for (int c = 0; c < 6; ++c) ml[c] = at_minus(c) + o.at_minus(c);
    minus_limit = ml;
  }
  return *this;
}

StateField1D& StateField1D::operator-=(const StateField1D& o) {
  for (int c = 0; c < 6; ++c)
    for (int i = 0; i < grid.n; ++i) comp[c][i] -= o.comp[c][i];
  if (minus_limit || o.minus_limit) {
    std::array<cplx, 6> ml;
    for (int c = 0; c < 6; ++c) ml[c] = at_minus(c) - o.at_minus(c);
    minus_limit = ml;
  }
  return *this;
}

StateField1D& StateField1D::operator*=(cplx a) {
  for (auto& c : comp)
    for (auto& v : c) v *= a;
  if (minus_limit)
    for (auto& v : *minus_limit) v *= a;
  return *this;
}

namespace {

// Split Simpson pairing of one scalar component; uses one-sided values at
// the interface node when provided.
cplx pair_component(const Grid1D& g, const std::vector<cplx>& f,
                    const std::vector<cplx>& v, cplx f_minus, cplx v_minus,
                    bool plus_only) {
  const auto w = simpson_weights(g.m + 1, g.h);
  cplx acc = 0.0;
  if (!plus_only) {
    for (int i = 0; i < g.m; ++i) acc += w[i] * f[i] * std::conj(v[i]);
    acc += w[g.m] * f_minus * std::conj(v_minus);
  }
  for (int i = g.m; i < g.n; ++i)
    acc += w[i - g.m] * f[i] * std::conj(v[i]);
  return acc;
}

}  // namespace

cplx scalar_pair(const Grid1D& g, const std::vector<cplx>& f,
                 const std::vector<cplx>& v) {
  return pair_component(g, f, v, f[g.m], v[g.m], false);
}

cplx inner_product(const MediumParams& p, const StateField1D& u,
                   const StateField1D& v) {
  if (!(u.grid == v.grid))
    throw std::invalid_argument("inner_product: grid mismatch");
  const Grid1D& g = u.grid;
  const double wgt[6] = {p.eps0,
                         p.mu0,
                         p.mu0,
                         1.0 / (p.eps0 * p.omega_e * p.omega_e),
                         1.0 / (p.mu0 * p.omega_m * p.omega_m),
                         1.0 / (p.mu0 * p.omega_m * p.omega_m)};
  cplx acc = 0.0;
  for (int c = 0; c < 6; ++c) {
    const bool plus_only = (c >= CJ);
    acc += wgt[c] * pair_component(g, u.comp[c], v.comp[c], u.at_minus(c),
                                   v.at_minus(c), plus_only);
  }
  return acc;
}

double norm(const MediumParams& p, const StateField1D& u) {
  return std::sqrt(std::max(0.0, inner_product(p, u, u).real()));
}

std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int d) {
  // Fornberg's recursion.
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<std::vector<double>>> c(
      n, std::vector<std::vector<double>>(n, std::vector<double>(d + 1, 0.0)));
  c[0][0][0] = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      for (int s = 0; s <= std::min(i, d); ++s) {
        c[i][j][s] = ((nodes[i] - x0) * c[i - 1][j][s] -
                      (s > 0 ? s * c[i - 1][j][s - 1] : 0.0)) /
                     c3;
      }
    }
    for (int s = 0; s <= std::min(i, d); ++s) {
      c[i][i][s] = c1 / c2 *
                   ((s > 0 ? s * c[i - 1][i - 1][s - 1] : 0.0) -
                    (nodes[i - 1] - x0) * c[i - 1][i - 1][s]);
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = c[n - 1][j][d];
  return w;
}

namespace {

// Order-6 first-derivative stencils on 7 nodes, offset = position of the
// evaluation node within the stencil.
const std::vector<double>& stencil7(int offset, double h) {
  static std::vector<std::vector<double>> cache(7);
  static double cached_h = 0.0;
  if (cached_h != h) {
    for (int off = 0; off < 7; ++off) {
      std::vector<double> nodes(7);
      for (int j = 0; j < 7; ++j) nodes[j] = (j - off) * h;
      cache[off] = fd_weights(0.0, nodes, 1);
    }
    cached_h = h;
  }
  return cache[offset];
}

}  // namespace

HalfDeriv deriv_halfline(const Grid1D& g, const std::vector<cplx>& f,
                         std::optional<cplx> f_minus_at_m) {
  HalfDeriv out;
  out.values.assign(g.n, cplx(0.0));
  auto panel = [&](int lo, int hi, bool minus_panel, auto&& store) {
    auto value = [&](int idx) -> cplx {
      if (minus_panel && idx == g.m && f_minus_at_m) return *f_minus_at_m;
      return f[idx];
    };
    for (int i = lo; i <= hi; ++i) {
      int off = 3;
      if (i - lo < 3)
        off = i - lo;
      else if (hi - i < 3)
        off = 6 - (hi - i);
      const auto& w = stencil7(off, g.h);
      cplx acc = 0.0;
      for (int j = 0; j < 7; ++j) acc += w[j] * value(i - off + j);
      store(i, acc);
    }
  };
  panel(0, g.m, true, [&](int i, cplx v) {
    if (i == g.m)
      out.minus_at_m = v;
    else
      out.values[i] = v;
  });
  panel(g.m, g.n - 1, false, [&](int i, cplx v) { out.values[i] = v; });
  return out;
}

double Bump::operator()(double x) const {
  const double u = (x - center) / halfwidth;
  if (std::abs(u) >= 1.0) return 0.0;
  const double taper = std::exp(-u * u / (1.0 - u * u));
  const double d = (x - center) / sigma;
  return std::exp(-0.5 * d * d) * taper;
}

double Bump::deriv(double x) const {
  const double u = (x - center) / halfwidth;
  if (std::abs(u) >= 1.0) return 0.0;
  const double q = 1.0 - u * u;
  const double taper = std::exp(-u * u / q);
  const double d = (x - center) / sigma;
  const double dtaper = taper * (-2.0 * u / (q * q)) / halfwidth;
  const double dgauss = -d / sigma;
  return std::exp(-0.5 * d * d) * (dgauss * taper + dtaper);
}

StateField1D random_test_field(const MediumParams& p, const Grid1D& g,
                               std::uint64_t seed) {
  (void)p;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  StateField1D F(g);
  auto fill = [&](int c, bool plus_only, bool zero_at_0) {
    Bump b;
    b.center = plus_only ? 1.6 + 0.6 * U(rng) : 0.8 * U(rng);
    b.sigma = 0.8 + 0.3 * U(rng);
    b.halfwidth = plus_only ? std::min(3.0, b.center - 0.05) : 4.0;
    const cplx a0(U(rng), U(rng)), a1(U(rng), U(rng));
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      if (plus_only && x <= 0.0) continue;
      cplx v = (a0 + a1 * (x - b.center)) * b(x);
      if (zero_at_0) v *= x;  // enforce H_y(0) = 0 smoothly
      F.comp[c][i] = v;
    }
  };
  fill(CE, false, false);
  fill(CHx, false, false);
  fill(CHy, false, true);
  fill(CJ, true, false);
  fill(CKx, true, false);
  fill(CKy, true, false);
  F.zero_below_interface();
  F.test_class = true;
  return F;
}

StateField1D random_divfree_field(const MediumParams& p, const Grid1D& g,
                                  double k, std::uint64_t seed) {
  (void)p;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  StateField1D F(g);

  Bump bh;
  bh.center = 0.6 * U(rng);
  bh.sigma = 0.9 + 0.3 * U(rng);
  bh.halfwidth = 4.0;
  const cplx ah(U(rng), U(rng));
  for (int i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    F.comp[CHx][i] = -iu * k * ah * bh(x);
    F.comp[CHy][i] = ah * bh.deriv(x);
  }

  Bump bk;
  bk.center = 1.7 + 0.5 * U(rng);
  bk.sigma = 0.5 + 0.2 * U(rng);
  bk.halfwidth = std::min(2.8, bk.center - 0.1);
  const cplx akc(U(rng), U(rng));
  for (int i = g.m; i < g.n; ++i) {
    const double x = g.x(i);
    if (x <= 0.0) continue;
    F.comp[CKx][i] = -iu * k * akc * bk(x);
    F.comp[CKy][i] = akc * bk.deriv(x);
  }

  Bump be;
  be.center = 0.5 * U(rng);
  be.sigma = 0.8 + 0.3 * U(rng);
  be.halfwidth = 4.0;
  const cplx ae(U(rng), U(rng));
  Bump bj;
  bj.center = 1.5 + 0.5 * U(rng);
  bj.sigma = 0.5 + 0.2 * U(rng);
  bj.halfwidth = std::min(2.8, bj.center - 0.1);
  const cplx aj(U(rng), U(rng));
  for (int i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    F.comp[CE][i] = ae * be(x);
    if (x > 0.0) F.comp[CJ][i] = aj * bj(x);
  }
  F.zero_below_interface();
  F.test_class = true;
  return F;
}

}  // namespace drude
