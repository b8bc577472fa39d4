#include "frlap/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace frlap {

namespace {

struct Gradients {
  Eigen::MatrixXd ux, uy;
  std::vector<double> c, d; // boundary fit coefficients
};

// Centered fourth-order u_x on the uniform x-grid; u_y by nonuniform
// three-point stencils with the y^{1-a}-aware fit replacing the rows next to
// the boundary, where t^a u_y^2 is the delicate integrand.
Gradients recover_gradients(const HalfStripField& u) {
  const HalfStripMesh& m = u.mesh;
  const int nx = m.nx, ny = m.ny;
  Gradients g;
  g.ux.resize(nx + 1, ny + 1);
  g.uy.resize(nx + 1, ny + 1);

  const double hx = m.hx;
  for (int j = 0; j <= ny; ++j) {
    for (int i = 2; i <= nx - 2; ++i)
      g.ux(i, j) = (-u.values(i + 2, j) + 8.0 * u.values(i + 1, j) -
                    8.0 * u.values(i - 1, j) + u.values(i - 2, j)) /
                   (12.0 * hx);
    g.ux(1, j) = (u.values(2, j) - u.values(0, j)) / (2.0 * hx);
    g.ux(nx - 1, j) = (u.values(nx, j) - u.values(nx - 2, j)) / (2.0 * hx);
    g.ux(0, j) = (u.values(1, j) - u.values(0, j)) / hx;
    g.ux(nx, j) = (u.values(nx, j) - u.values(nx - 1, j)) / hx;
  }

  u.boundary_fit(g.c, g.d);
  const double a = m.a, p = 1.0 - a, y1 = m.y[1];
  for (int i = 0; i <= nx; ++i) {
    g.uy(i, 0) = 0.0; // not used: the first cell integrates the fit exactly
    g.uy(i, 1) = g.c[i] * p * std::pow(y1, -a) + 2.0 * g.d[i] * y1;
    for (int j = 2; j < ny; ++j) {
      const double h1 = m.y[j] - m.y[j - 1], h2 = m.y[j + 1] - m.y[j];
      g.uy(i, j) = -h2 / (h1 * (h1 + h2)) * u.values(i, j - 1) +
                   (h2 - h1) / (h1 * h2) * u.values(i, j) +
                   h1 / (h2 * (h1 + h2)) * u.values(i, j + 1);
    }
    g.uy(i, ny) = (u.values(i, ny) - u.values(i, ny - 1)) / (m.y[ny] - m.y[ny - 1]);
  }
  return g;
}

} // namespace

HamiltonianProfile hamiltonian_profile(const HalfStripField& u, const FracOrder& order) {
  const HalfStripMesh& m = u.mesh;
  if (m.a != order.a)
    throw std::invalid_argument("hamiltonian_profile: order does not match the field weight");
  const int nx = m.nx, ny = m.ny;
  const double a = m.a, p = 1.0 - a, opa = 1.0 + a;
  const Gradients g = recover_gradients(u);

  HamiltonianProfile hp;
  hp.xs.resize(nx + 1);
  for (int i = 0; i <= nx; ++i) hp.xs[i] = m.x(i);
  hp.partial = Eigen::MatrixXd::Zero(nx + 1, ny + 1);
  hp.H.assign(nx + 1, 0.0);
  hp.x_part.assign(nx + 1, 0.0);
  hp.y_part.assign(nx + 1, 0.0);
  hp.tail_bound.assign(nx + 1, 0.0);

  const double y1 = m.y[1];
  for (int i = 0; i <= nx; ++i) {
    // first cell [0, y1]: u_x linear between rows 0 and 1, u_y from the fit
    const double b0 = g.ux(i, 0);
    const double al = (g.ux(i, 1) - g.ux(i, 0)) / y1;
    const double ix = b0 * b0 * std::pow(y1, 1.0 + a) / (1.0 + a) +
                      2.0 * al * b0 * std::pow(y1, 2.0 + a) / (2.0 + a) +
                      al * al * std::pow(y1, 3.0 + a) / (3.0 + a);
    const double ci = g.c[i], di = g.d[i];
    const double iy = ci * ci * p * std::pow(y1, p) +
                      2.0 * ci * di * p * y1 * y1 +
                      4.0 * di * di * std::pow(y1, 3.0 + a) / (3.0 + a);
    hp.x_part[i] = 0.5 * opa * ix;
    hp.y_part[i] = 0.5 * opa * iy;
    hp.partial(i, 1) = 0.5 * opa * (ix - iy);
    // remaining cells: endpoint average against the exact t^a moment
    for (int j = 1; j < ny; ++j) {
      const double w = (std::pow(m.y[j + 1], 1.0 + a) - std::pow(m.y[j], 1.0 + a)) / (1.0 + a);
      const double gx = 0.5 * (g.ux(i, j) * g.ux(i, j) + g.ux(i, j + 1) * g.ux(i, j + 1));
      const double gy = 0.5 * (g.uy(i, j) * g.uy(i, j) + g.uy(i, j + 1) * g.uy(i, j + 1));
      hp.partial(i, j + 1) = hp.partial(i, j) + 0.5 * opa * w * (gx - gy);
      hp.x_part[i] += 0.5 * opa * w * gx;
      hp.y_part[i] += 0.5 * opa * w * gy;
    }
    hp.H[i] = hp.partial(i, ny);
  }

  // |grad u| <= C2 / y above the mid height gives the tail budget
  double c2 = 0.0;
  for (int j = ny / 2; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const double gn = std::hypot(g.ux(i, j), g.uy(i, j));
      c2 = std::max(c2, m.y[j] * gn);
    }
  const double tail = opa * c2 * c2 * std::pow(m.Y, a - 1.0) / (1.0 - a);
  for (int i = 0; i <= nx; ++i) hp.tail_bound[i] = tail;
  return hp;
}

IdentityReport verify_identity(const LayerSolution& layer, const Nonlinearity& nl) {
  const HamiltonianProfile hp = hamiltonian_profile(layer.field, layer.order);
  const double g1 = nl.G(1.0);
  IdentityReport rep;
  rep.g_level_diff = std::abs(g1 - nl.G(-1.0));
  const int nx = layer.field.mesh.nx;
  for (int i = 1; i < nx; ++i) {
    const double gap = nl.G(layer.trace.values[i]) - g1;
    rep.max_residual = std::max(rep.max_residual, std::abs(hp.H[i] - gap));
  }
  return rep;
}

ModicaReport verify_modica(const LayerSolution& layer, const Nonlinearity& nl) {
  const HamiltonianProfile hp = hamiltonian_profile(layer.field, layer.order);
  const HalfStripMesh& m = layer.field.mesh;
  const double g1 = nl.G(1.0);
  ModicaReport rep;
  rep.gap0 = nl.G(0.0) - g1;
  rep.min_margin_all = std::numeric_limits<double>::infinity();
  rep.min_margin_strict = std::numeric_limits<double>::infinity();
  for (int i = 1; i < m.nx; ++i) {
    const double gap = nl.G(layer.trace.values[i]) - g1;
    const bool strict_x = std::abs(layer.trace.values[i]) <= 0.9;
    for (int j = 0; j <= m.ny; ++j) {
      const double margin = gap - hp.partial(i, j);
      rep.min_margin_all = std::min(rep.min_margin_all, margin);
      if (strict_x && m.y[j] <= 0.5 * m.Y) {
        rep.min_margin_strict = std::min(rep.min_margin_strict, margin);
        ++rep.strict_nodes;
      }
    }
  }
  return rep;
}

RadialHamiltonianReport radial_hamiltonian(const RadialSolution& rad,
                                           const Nonlinearity& nl) {
  const HalfStripMesh& m = rad.field.mesh;
  if (rad.dimension < 2)
    throw std::invalid_argument("radial_hamiltonian: dimension must be >= 2");
  const FracOrder& order = rad.order;
  const HamiltonianProfile hp = hamiltonian_profile(rad.field, order);

  RadialHamiltonianReport rep;
  const int nr = m.nx, ny = m.ny;
  rep.rs = hp.xs;
  rep.profile.resize(nr + 1);
  for (int i = 0; i <= nr; ++i)
    rep.profile[i] = hp.H[i] - nl.G(rad.field.values(i, 0));
  rep.g_origin_gap = nl.G(0.0) - nl.G(rad.profile.values[0]);

  const double opa = 1.0 + m.a;
  const double gap_tol = 1e-8 + 1e-6 * std::abs(rep.profile[0] - rep.profile[nr]);
  rep.max_increase = 0.0;
  for (int i = 0; i < nr; ++i)
    rep.max_increase = std::max(rep.max_increase, rep.profile[i + 1] - rep.profile[i]);
  rep.monotone_pass = rep.max_increase <= gap_tol;

  // discrete slope against -(1+a)((n-1)/r) int t^a u_r^2 dt where the latter
  // is not tiny
  const Gradients g = recover_gradients(rad.field);
  std::vector<double> rhs(nr + 1, 0.0);
  double rhs_scale = 0.0;
  for (int i = 1; i < nr; ++i) {
    double I = 0.0;
    const double y1 = m.y[1];
    const double b0 = g.ux(i, 0), al = (g.ux(i, 1) - g.ux(i, 0)) / y1;
    I += b0 * b0 * std::pow(y1, 1.0 + m.a) / (1.0 + m.a) +
         2.0 * al * b0 * std::pow(y1, 2.0 + m.a) / (2.0 + m.a) +
         al * al * std::pow(y1, 3.0 + m.a) / (3.0 + m.a);
    for (int j = 1; j < ny; ++j) {
      const double w = (std::pow(m.y[j + 1], 1.0 + m.a) - std::pow(m.y[j], 1.0 + m.a)) / (1.0 + m.a);
      I += w * 0.5 * (g.ux(i, j) * g.ux(i, j) + g.ux(i, j + 1) * g.ux(i, j + 1));
    }
    rhs[i] = -opa * (rad.dimension - 1) / m.x(i) * I;
    rhs_scale = std::max(rhs_scale, std::abs(rhs[i]));
  }
  rep.deriv_match_rel = 0.0;
  for (int i = 1; i < nr; ++i) {
    if (std::abs(rhs[i]) < std::max(1e-6, 0.05 * rhs_scale)) continue;
    const double slope = (rep.profile[i + 1] - rep.profile[i - 1]) / (2.0 * m.hx);
    rep.deriv_match_rel = std::max(rep.deriv_match_rel,
                                   std::abs(slope - rhs[i]) / std::abs(rhs[i]));
  }
  return rep;
}

SLimitReport s_limit_split(const std::vector<LayerSolution>& layers,
                           const std::vector<double>& x_probe,
                           const Nonlinearity& nl) {
  if (layers.size() < 3)
    throw std::invalid_argument("s_limit_split: need at least 3 layers");
  for (const auto& l : layers)
    if (l.order.s < 0.7)
      throw std::invalid_argument("s_limit_split: layers must have s >= 0.7");

  SLimitReport rep;
  rep.x_probe = x_probe;
  rep.x_part.assign(x_probe.size(), {});
  rep.y_part.assign(x_probe.size(), {});

  for (const auto& l : layers) {
    rep.s_values.push_back(l.order.s);
    const HamiltonianProfile hp = hamiltonian_profile(l.field, l.order);
    const HalfStripMesh& m = l.field.mesh;
    for (std::size_t k = 0; k < x_probe.size(); ++k) {
      int best = 0;
      for (int i = 1; i <= m.nx; ++i)
        if (std::abs(m.x(i) - x_probe[k]) < std::abs(m.x(best) - x_probe[k])) best = i;
      rep.x_part[k].push_back(hp.x_part[best]);
      rep.y_part[k].push_back(hp.y_part[best]);
    }
  }

  // classical target (1/2) v'^2 = G(v) - G(1) at the probes
  const std::vector<double> ode = ode_layer_values(nl, x_probe);
  const double g1 = nl.G(1.0);
  for (std::size_t k = 0; k < x_probe.size(); ++k)
    rep.ode_target.push_back(nl.G(ode[k]) - g1);

  rep.y_part_decreasing = true;
  const double noise = 1e-10;
  for (std::size_t k = 0; k < x_probe.size(); ++k)
    for (std::size_t j = 0; j + 1 < layers.size(); ++j)
      if (rep.y_part[k][j + 1] > rep.y_part[k][j] + noise)
        rep.y_part_decreasing = false;

  rep.x_part_rel_err_last = 0.0;
  for (std::size_t k = 0; k < x_probe.size(); ++k) {
    const double tgt = rep.ode_target[k];
    if (std::abs(tgt) < 1e-10) continue;
    rep.x_part_rel_err_last = std::max(rep.x_part_rel_err_last,
                                       std::abs(rep.x_part[k].back() - tgt) / std::abs(tgt));
  }
  rep.pass = rep.y_part_decreasing && rep.x_part_rel_err_last <= 0.2;
  return rep;
}

} // namespace frlap
