#include "frlap/extension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frlap/quadrature.hpp"
#include "frlap/schur.hpp"

namespace frlap {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1]
constexpr double kGLx[8] = {0.0950125098376374, 0.2816035507792589,
                            0.4580167776572274, 0.6178762444026438,
                            0.7554044083550030, 0.8656312023878318,
                            0.9445750230732326, 0.9894009349916499};
constexpr double kGLw[8] = {0.1894506104550685, 0.1826034150449236,
                            0.1691565193950025, 0.1495959888165767,
                            0.1246289712555339, 0.0951585116824928,
                            0.0622535239386479, 0.0271524594117541};

double interp(const GridFunction& v, double t) {
  if (t <= v.x0) return v.left_asymptote.value_or(v.values.front());
  const double xe = v.x_end();
  if (t >= xe) return v.right_asymptote.value_or(v.values.back());
  const double u = (t - v.x0) / v.h;
  const auto k = static_cast<std::size_t>(u);
  const double frac = u - static_cast<double>(k);
  if (k + 1 >= v.size()) return v.values.back();
  return v.values[k] * (1.0 - frac) + v.values[k + 1] * frac;
}

// mass of the unit-height kernel H_s beyond xi > c (c may be negative)
double h_mass_above(double s, double p_ns, double c) {
  if (c <= 0.0) {
    if (c == 0.0) return 0.5;
    return 1.0 - poisson_mass_tail_1d(s, p_ns, 1.0, -c);
  }
  return poisson_mass_tail_1d(s, p_ns, 1.0, c);
}

} // namespace

double poisson_extend_at(const GridFunction& v, const FracOrder& order,
                         double x, double y) {
  if (y < 0.0) throw std::domain_error("poisson_extend_at: y must be >= 0");
  if (y == 0.0) return interp(v, x);
  const double s = order.s;
  const double p = poisson_normalizer(1, s);
  const double AL = v.left_asymptote.value_or(v.values.front());
  const double AR = v.right_asymptote.value_or(v.values.back());

  // u(x,y) = int H(xi) v(x - y xi) dxi; v becomes AL past the right crossing
  // and AR past the left crossing
  const double cr = (x - v.x0) / y;      // xi above this reads AL
  const double cl = (x - v.x_end()) / y; // xi below this reads AR
  double acc = AL * h_mass_above(s, p, cr) + AR * (1.0 - h_mass_above(s, p, cl));

  // dyadic panels covering [cl, cr]
  const double lim = std::max(std::abs(cl), std::abs(cr));
  std::vector<double> cuts{0.0};
  for (double e = 0.25; cuts.back() < lim; e *= 2.0) cuts.push_back(e);
  auto panel = [&](double lo, double hi) {
    lo = std::max(lo, cl);
    hi = std::min(hi, cr);
    if (lo >= hi) return 0.0;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (int g = 0; g < 8; ++g) {
      for (double sg : {-1.0, 1.0}) {
        const double xi = mid + sg * half * kGLx[g];
        const double H = p * std::pow(1.0 + xi * xi, -0.5 * (1.0 + 2.0 * s));
        sum += kGLw[g] * H * interp(v, x - y * xi);
      }
    }
    return sum * half;
  };
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    acc += panel(cuts[k], cuts[k + 1]);
    acc += panel(-cuts[k + 1], -cuts[k]);
  }
  return acc;
}

HalfStripField extend_by_convolution(const GridFunction& v, const FracOrder& order,
                                     const HalfStripMesh& mesh, int threads) {
  if (mesh.a != order.a)
    throw std::invalid_argument("extend_by_convolution: mesh weight exponent != order.a");
  if (!v.left_asymptote || !v.right_asymptote)
    throw std::invalid_argument("extend_by_convolution: trace needs declared asymptotes");
  HalfStripField f(mesh);
  (void)threads;
  for (int i = 0; i <= mesh.nx; ++i) {
    f.values(i, 0) = interp(v, mesh.x(i));
    for (int j = 1; j <= mesh.ny; ++j)
      f.values(i, j) = poisson_extend_at(v, order, mesh.x(i), mesh.y[j]);
  }
  return f;
}

std::pair<HalfStripField, LinearSystemStats>
solve_dirichlet(const HalfStripMesh& mesh, const BoundaryData& data) {
  DirichletMask dir{true, true, !mesh.is_radial(), true};
  Assembled as = assemble(mesh, dir, &data);

  LinearSystemStats st;
  SpMat D = as.A_ww - SpMat(as.A_ww.transpose());
  double asym = 0.0;
  for (int k = 0; k < D.outerSize(); ++k)
    for (SpMat::InnerIterator it(D, k); it; ++it)
      asym = std::max(asym, std::abs(it.value()));
  st.assembly_symmetric = asym <= 1e-14 * as.diag_scale;

  Eigen::SimplicialLDLT<SpMat> fac(as.A_ww);
  if (fac.info() != Eigen::Success)
    throw std::runtime_error("solve_dirichlet: factorization failed");
  Eigen::VectorXd w = fac.solve(as.rhs_w);
  st.iterations = 1;
  st.residual_norm = (as.A_ww * w - as.rhs_w).cwiseAbs().maxCoeff() / as.diag_scale;
  st.converged = true;

  HalfStripField f(mesh);
  for (int i = 0; i <= mesh.nx; ++i)
    for (int j = 0; j <= mesh.ny; ++j) {
      const int p = as.index[as.node(mesh, i, j)];
      if (p >= 0) {
        f.values(i, j) = w[p - as.n_trace];
      } else if (!mesh.is_radial() && i == 0) {
        f.values(i, j) = data.left[j];
      } else if (i == mesh.nx) {
        f.values(i, j) = data.right[j];
      } else if (j == 0) {
        f.values(i, j) = data.bottom[i];
      } else {
        f.values(i, j) = data.top[i];
      }
    }
  // radial meshes reflect at the axis; fill the axis column for j rows that
  // stayed unknown is already handled above (index >= 0)
  return {std::move(f), st};
}

GridFunction dtn_apply(const GridFunction& v, const FracOrder& order,
                       const HalfStripMesh& mesh,
                       const BoundaryData* boundary_override) {
  BoundaryData bd;
  if (boundary_override) {
    bd = *boundary_override;
  } else {
    bd.top.resize(mesh.nx + 1);
    bd.left.resize(mesh.ny + 1);
    bd.right.resize(mesh.ny + 1);
    for (int i = 0; i <= mesh.nx; ++i)
      bd.top[i] = poisson_extend_at(v, order, mesh.x(i), mesh.Y);
    bd.left[0] = interp(v, mesh.x0);
    bd.right[0] = interp(v, mesh.x1);
    for (int j = 1; j <= mesh.ny; ++j) {
      bd.left[j] = poisson_extend_at(v, order, mesh.x0, mesh.y[j]);
      bd.right[j] = poisson_extend_at(v, order, mesh.x1, mesh.y[j]);
    }
  }
  bd.bottom.resize(mesh.nx + 1);
  for (int i = 0; i <= mesh.nx; ++i) bd.bottom[i] = interp(v, mesh.x(i));

  auto [field, st] = solve_dirichlet(mesh, bd);
  auto flux = field.flux_trace();
  GridFunction out = GridFunction::make(mesh.x0, mesh.hx, std::move(flux));
  return out;
}

// ---------------------------------------------------------------------------
// Schur machinery

Eigen::VectorXd SchurSystem::recover(const Eigen::VectorXd& t) const {
  return wfac.solve(as.rhs_w - A_wt * t);
}

std::unique_ptr<SchurSystem> build_schur(const HalfStripMesh& mesh,
                                         const DirichletMask& dir,
                                         const BoundaryData* data) {
  auto sys = std::make_unique<SchurSystem>();
  sys->as = assemble(mesh, dir, data);
  Assembled& as = sys->as;
  sys->wfac.compute(as.A_ww);
  if (sys->wfac.info() != Eigen::Success)
    throw std::runtime_error("build_schur: interior factorization failed");
  sys->A_wt = SpMat(as.A_tw.transpose());

  const int nt = as.n_trace;
  sys->S = Eigen::MatrixXd(as.A_tt);
  Eigen::VectorXd col(as.n_rest);
  for (int k = 0; k < nt; ++k) {
    col = sys->A_wt.col(k);
    if (as.n_rest > 0) sys->S.col(k) -= as.A_tw * sys->wfac.solve(col);
  }
  sys->q = as.rhs_t;
  if (as.n_rest > 0) sys->q -= as.A_tw * sys->wfac.solve(as.rhs_w);
  return sys;
}

namespace {

struct TraceProblem {
  const SchurSystem& sys;
  const Nonlinearity& nl;
  double one_plus_a;
  Eigen::VectorXd mass;
  int pin = -1; // trace index pinned to zero, -1 for none

  Eigen::VectorXd residual(const Eigen::VectorXd& t, double lambda) const {
    Eigen::VectorXd r = sys.S * t - sys.q;
    for (int i = 0; i < t.size(); ++i) r[i] -= mass[i] * nl.f(t[i]) / one_plus_a;
    if (pin >= 0) r[pin] += lambda;
    return r;
  }
  double energy_reduced(const Eigen::VectorXd& t) const {
    double e = 0.5 * t.dot(sys.S * t) - sys.q.dot(t);
    for (int i = 0; i < t.size(); ++i) e += mass[i] * nl.G(t[i]) / one_plus_a;
    return e;
  }
};

} // namespace

std::pair<HalfStripField, LinearSystemStats>
solve_neumann_nonlinear(const Nonlinearity& nl, const FracOrder& order,
                        const HalfStripMesh& mesh, const HalfStripField& init,
                        const NonlinearOptions& opts) {
  if (mesh.a != order.a)
    throw std::invalid_argument("solve_neumann_nonlinear: mesh weight exponent != order.a");
  DirichletMask dir;
  BoundaryData bd;
  if (mesh.is_radial()) {
    dir.right = true;
    bd.right.assign(mesh.ny + 1, 0.0);
  } else if (opts.sides == SideBC::dirichlet_asymptotes) {
    dir.left = dir.right = true;
    bd.left.assign(mesh.ny + 1, opts.side_left);
    bd.right.assign(mesh.ny + 1, opts.side_right);
  }
  auto sys = build_schur(mesh, dir, &bd);
  const int nt = sys->n_trace();

  TraceProblem prob{*sys, nl, 1.0 + mesh.a, Eigen::VectorXd(nt), -1};
  for (int k = 0; k < nt; ++k) prob.mass[k] = sys->as.trace_mass[k];
  if (opts.pin_center && !mesh.is_radial()) {
    // trace index whose x is closest to 0
    int best = 0;
    for (int k = 1; k < nt; ++k)
      if (std::abs(mesh.x(sys->as.trace_cols[k])) <
          std::abs(mesh.x(sys->as.trace_cols[best])))
        best = k;
    prob.pin = best;
  }

  Eigen::VectorXd t(nt);
  for (int k = 0; k < nt; ++k) t[k] = init.values(sys->as.trace_cols[k], 0);
  double lambda = 0.0;

  LinearSystemStats st;
  const double ref = std::max(1.0, sys->q.cwiseAbs().maxCoeff());

  if (opts.strategy == Strategy::newton) {
    Eigen::MatrixXd J(nt + 1, nt + 1);
    Eigen::VectorXd rhs(nt + 1), step(nt + 1);
    bool ok = false;
    int it = 0;
    for (; it < opts.max_iter; ++it) {
      Eigen::VectorXd r = prob.residual(t, lambda);
      const double pin_r = prob.pin >= 0 ? t[prob.pin] : 0.0;
      const double rn = r.cwiseAbs().maxCoeff() + std::abs(pin_r);
      if (rn <= opts.tol * ref) { ok = true; break; }

      const int nsys = prob.pin >= 0 ? nt + 1 : nt;
      J.setZero(nsys, nsys);
      J.topLeftCorner(nt, nt) = sys->S;
      for (int i = 0; i < nt; ++i)
        J(i, i) -= prob.mass[i] * nl.fprime(t[i]) / prob.one_plus_a;
      rhs.resize(nsys);
      rhs.head(nt) = -r;
      if (prob.pin >= 0) {
        J(prob.pin, nt) = 1.0;
        J(nt, prob.pin) = 1.0;
        rhs[nt] = -pin_r;
      }
      step = J.partialPivLu().solve(rhs.head(nsys));

      const double rn2_0 = r.squaredNorm() + pin_r * pin_r;
      double alpha = 1.0;
      Eigen::VectorXd tn;
      double ln = lambda;
      for (int ls = 0; ls < 30; ++ls) {
        tn = t + alpha * step.head(nt);
        ln = lambda + (prob.pin >= 0 ? alpha * step[nt] : 0.0);
        Eigen::VectorXd r2 = prob.residual(tn, ln);
        const double p2 = prob.pin >= 0 ? tn[prob.pin] : 0.0;
        if (r2.squaredNorm() + p2 * p2 <= (1.0 - 0.25 * alpha) * rn2_0 || alpha < 1e-5)
          break;
        alpha *= 0.5;
      }
      const double dstep = (tn - t).cwiseAbs().maxCoeff();
      t = tn;
      lambda = ln;
      if (alpha == 1.0 && dstep <= 1e-13 * std::max(1.0, t.cwiseAbs().maxCoeff())) {
        ok = true;
        ++it;
        break;
      }
    }
    st.iterations = it;
    st.converged = ok;
  } else {
    // monotone Armijo descent on the reduced energy; spectral step length
    double e0 = prob.energy_reduced(t);
    Eigen::VectorXd g = prob.residual(t, 0.0);
    if (prob.pin >= 0) g[prob.pin] = 0.0;
    double alpha = 1.0 / std::max(1.0, sys->S.diagonal().maxCoeff());
    int it = 0;
    bool ok = false;
    Eigen::VectorXd t_old = t, g_old = g;
    for (; it < opts.flow_max_iter; ++it) {
      if (g.cwiseAbs().maxCoeff() <= 1e3 * opts.tol * ref) { ok = true; break; }
      double step_len = alpha;
      for (int ls = 0; ls < 60; ++ls) {
        Eigen::VectorXd tn = t - step_len * g;
        if (prob.pin >= 0) tn[prob.pin] = 0.0;
        const double en = prob.energy_reduced(tn);
        if (en <= e0 - 1e-4 * step_len * g.squaredNorm()) {
          t_old = t;
          g_old = g;
          t = tn;
          e0 = en;
          break;
        }
        step_len *= 0.5;
      }
      g = prob.residual(t, 0.0);
      if (prob.pin >= 0) g[prob.pin] = 0.0;
      const Eigen::VectorXd dt = t - t_old, dg = g - g_old;
      const double dgg = dt.dot(dg);
      alpha = dgg > 0.0 ? std::min(1e6, dt.squaredNorm() / dgg) : 2.0 * step_len;
    }
    st.iterations = it;
    st.converged = ok;
  }

  // recover interior and report scaled residuals
  Eigen::VectorXd w = sys->recover(t);
  Eigen::VectorXd r = prob.residual(t, lambda);
  double res = r.cwiseAbs().maxCoeff() / ref;
  if (sys->as.n_rest > 0) {
    Eigen::VectorXd rw = sys->as.A_ww * w + sys->A_wt * t - sys->as.rhs_w;
    res = std::max(res, rw.cwiseAbs().maxCoeff() / sys->as.diag_scale);
  }
  st.residual_norm = res;

  HalfStripField f(mesh);
  const Assembled& as = sys->as;
  for (int i = 0; i <= mesh.nx; ++i)
    for (int j = 0; j <= mesh.ny; ++j) {
      const int p = as.index[as.node(mesh, i, j)];
      if (p < 0) {
        f.values(i, j) = j == 0 && dir.bottom ? bd.bottom[i]
                         : (i == 0 ? bd.left[j] : bd.right[j]);
      } else if (p < as.n_trace) {
        f.values(i, j) = t[p];
      } else {
        f.values(i, j) = w[p - as.n_trace];
      }
    }
  return {std::move(f), st};
}

std::vector<double> scheme_flux_trace(const HalfStripField& u) {
  const HalfStripMesh& m = u.mesh;
  std::vector<double> flux(m.nx + 1, 0.0);
  const double ty0 = m.ty_face(0);
  const double wy0 = m.wy_cell(0);
  for (int i = 0; i <= m.nx; ++i) {
    double bal = m.wx_cell(i) * ty0 * (u.values(i, 1) - u.values(i, 0));
    if (i > 0)
      bal += wy0 * m.rho_face(i - 1) * (u.values(i - 1, 0) - u.values(i, 0)) / m.hx;
    if (i < m.nx)
      bal += wy0 * m.rho_face(i) * (u.values(i + 1, 0) - u.values(i, 0)) / m.hx;
    flux[i] = -bal / m.wx_cell(i);
  }
  return flux;
}

DualField dual_conjugate(const HalfStripField& u) {
  const HalfStripMesh& m = u.mesh;
  const double a = m.a;
  HalfStripMesh md = m;
  md.a = -a; // same geometry, conjugate weight

  HalfStripField w(md);
  std::vector<double> c, d;
  u.boundary_fit(c, d);
  const double y1 = m.y[1];
  for (int i = 0; i <= m.nx; ++i) {
    w.values(i, 0) = -(1.0 - a) * c[i];
    // fitted expansion at the first node
    w.values(i, 1) = -(1.0 - a) * c[i] - 2.0 * d[i] * std::pow(y1, 1.0 + a);
    for (int j = 2; j < m.ny; ++j) {
      const double h1 = m.y[j] - m.y[j - 1], h2 = m.y[j + 1] - m.y[j];
      const double uy = -h2 / (h1 * (h1 + h2)) * u.values(i, j - 1) +
                        (h2 - h1) / (h1 * h2) * u.values(i, j) +
                        h1 / (h2 * (h1 + h2)) * u.values(i, j + 1);
      w.values(i, j) = -std::pow(m.y[j], a) * uy;
    }
    const double hn = m.y[m.ny] - m.y[m.ny - 1];
    w.values(i, m.ny) = -std::pow(m.y[m.ny], a) *
                        (u.values(i, m.ny) - u.values(i, m.ny - 1)) / hn;
  }

  // interior residual of the conjugate operator applied to w
  BoundaryData bd;
  bd.bottom.resize(m.nx + 1);
  bd.top.resize(m.nx + 1);
  bd.left.resize(m.ny + 1);
  bd.right.resize(m.ny + 1);
  for (int i = 0; i <= m.nx; ++i) {
    bd.bottom[i] = w.values(i, 0);
    bd.top[i] = w.values(i, m.ny);
  }
  for (int j = 0; j <= m.ny; ++j) {
    bd.left[j] = w.values(0, j);
    bd.right[j] = w.values(m.nx, j);
  }
  DirichletMask dir{true, true, !m.is_radial(), true};
  Assembled as = assemble(md, dir, &bd);
  Eigen::VectorXd wi(as.n_rest);
  for (int i = 0; i <= m.nx; ++i)
    for (int j = 0; j <= m.ny; ++j) {
      const int p = as.index[as.node(md, i, j)];
      if (p >= 0) wi[p - as.n_trace] = w.values(i, j);
    }
  const double res = (as.A_ww * wi - as.rhs_w).cwiseAbs().maxCoeff() / as.diag_scale;
  return {std::move(w), res};
}

double energy(const HalfStripField& u, const Nonlinearity& nl, double R) {
  const HalfStripMesh& m = u.mesh;
  if (R > std::min(std::min(-m.x0, m.x1), m.Y) + 1e-12)
    throw std::invalid_argument("energy: R exceeds the truncated domain");
  const double a = m.a;
  double bulk = 0.0;
  for (int i = 0; i < m.nx; ++i) {
    const double xc = m.x(i) + 0.5 * m.hx;
    for (int j = 0; j < m.ny; ++j) {
      const double yc = 0.5 * (m.y[j] + m.y[j + 1]);
      if (xc * xc + yc * yc > R * R) continue;
      const double dy = m.y[j + 1] - m.y[j];
      const double ux = 0.5 * ((u.values(i + 1, j) - u.values(i, j)) +
                               (u.values(i + 1, j + 1) - u.values(i, j + 1))) / m.hx;
      const double uy = 0.5 * ((u.values(i, j + 1) - u.values(i, j)) +
                               (u.values(i + 1, j + 1) - u.values(i + 1, j))) / dy;
      const double wcell = m.hx * (std::pow(m.y[j + 1], 1.0 + a) -
                                   std::pow(m.y[j], 1.0 + a)) / (1.0 + a);
      bulk += 0.5 * wcell * (ux * ux + uy * uy);
    }
  }
  double bdry = 0.0;
  for (int i = 0; i <= m.nx; ++i)
    if (std::abs(m.x(i)) < R) bdry += m.wx_cell(i) * nl.G(u.values(i, 0));
  return bulk + bdry / (1.0 + a);
}

} // namespace frlap
