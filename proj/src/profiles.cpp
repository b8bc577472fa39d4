#include "frlap/profiles.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "frlap/schur.hpp"

namespace frlap {

namespace {

double estimate_width(const Nonlinearity& nl) {
  double gpp_max = 1e-12;
  for (int i = 0; i <= 100; ++i) {
    const double v = -1.0 + 0.02 * i;
    const double d = 1e-4;
    const double gpp = (nl.G(v + d) - 2.0 * nl.G(v) + nl.G(v - d)) / (d * d);
    gpp_max = std::max(gpp_max, gpp);
  }
  return std::sqrt(2.0 / gpp_max);
}

} // namespace

LayerSolution solve_layer(const Nonlinearity& nl, const FracOrder& order,
                          const HalfStripMesh& mesh, const LayerOptions& opts) {
  if (mesh.is_radial()) throw std::invalid_argument("solve_layer: strip meshes only");
  const double scale = opts.scale_to_fraclap
                           ? extension_constant(order.s) / (2.0 * (1.0 - order.s))
                           : 1.0;
  const Nonlinearity eff = scale == 1.0 ? nl : nl.scaled(scale);

  const double width = opts.init_width > 0.0 ? opts.init_width : estimate_width(nl);
  HalfStripField init(mesh);
  for (int i = 0; i <= mesh.nx; ++i) {
    const double ti = opts.warm_start
                          ? std::clamp((mesh.x(i) - opts.warm_start->x0) / opts.warm_start->h,
                                       0.0, double(opts.warm_start->size() - 1))
                          : 0.0;
    double vi;
    if (opts.warm_start) {
      const auto k = static_cast<std::size_t>(ti);
      const double fr = ti - static_cast<double>(k);
      vi = k + 1 < opts.warm_start->size()
               ? opts.warm_start->values[k] * (1.0 - fr) + opts.warm_start->values[k + 1] * fr
               : opts.warm_start->values.back();
    } else {
      vi = std::tanh(mesh.x(i) / width);
    }
    for (int j = 0; j <= mesh.ny; ++j) init.values(i, j) = vi;
  }

  auto [field, stats] = solve_neumann_nonlinear(eff, order, mesh, init, opts.solver);

  LayerSolution sol{GridFunction{}, std::move(field), order, opts.solver.pin_center,
                    stats, false, 0.0, scale};
  auto tr = sol.field.trace();
  tr.left_asymptote = -1.0;
  tr.right_asymptote = 1.0;
  tr.decay = GridFunction::Decay::power_2s;
  sol.trace = std::move(tr);

  sol.monotone = true;
  for (std::size_t i = 0; i + 1 < sol.trace.size(); ++i)
    if (!(sol.trace.values[i + 1] > sol.trace.values[i] - 1e-12)) {
      sol.monotone = false;
      break;
    }

  // measured against the flux the scheme enforces; the fitted flux estimates
  // the continuum limit and differs from it at discretization order
  const auto flux = scheme_flux_trace(sol.field);
  double br = 0.0;
  for (int i = 1; i < mesh.nx; ++i)
    br = std::max(br, std::abs((1.0 + mesh.a) * flux[i] - eff.f(sol.trace.values[i])));
  sol.boundary_residual = br;
  return sol;
}

std::vector<double> ode_layer_values(const Nonlinearity& nl, const std::vector<double>& xs) {
  auto rep = check_necessary_conditions(nl, 400);
  if (!rep.nec1_pass || !rep.nec2_pass)
    throw std::invalid_argument("solve_ode_layer: nonlinearity fails the layer conditions");
  const double g1 = nl.G(1.0);

  // degenerate wells make the endpoint quadrature blow up faster than log
  const double d = 1e-4;
  const double gpp1 = (nl.G(1.0 - 2.0 * d) - 2.0 * nl.G(1.0 - d) + nl.G(1.0)) / (d * d);
  const double vcap = gpp1 > 1e-6 ? 1.0 - 1e-14 : 1.0 - 1e-8;

  boost::math::quadrature::tanh_sinh<double> ts;
  auto x_of_v = [&](double v) {
    // int_0^v dw / sqrt(2 (G(w) - G(1))); sign handles v < 0
    if (v == 0.0) return 0.0;
    auto g = [&](double w) {
      return 1.0 / std::sqrt(std::max(2.0 * (nl.G(w) - g1), 1e-300));
    };
    return v > 0.0 ? ts.integrate(g, 0.0, v) : -ts.integrate(g, v, 0.0);
  };

  std::vector<double> vals(xs.size());
  const double xmax = x_of_v(vcap), xmin = x_of_v(-vcap);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double x = xs[k];
    if (x == 0.0) { vals[k] = 0.0; continue; }
    if (x >= xmax) { vals[k] = vcap; continue; }
    if (x <= xmin) { vals[k] = -vcap; continue; }
    double lo = x > 0.0 ? 0.0 : -vcap, hi = x > 0.0 ? vcap : 0.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (x_of_v(mid) < x) lo = mid; else hi = mid;
      if (hi - lo < 1e-15) break;
    }
    vals[k] = 0.5 * (lo + hi);
  }
  return vals;
}

GridFunction solve_ode_layer(const Nonlinearity& nl, const std::vector<double>& xs) {
  std::vector<double> vals = ode_layer_values(nl, xs);
  const double h = xs.size() > 1 ? xs[1] - xs[0] : 1.0;
  return GridFunction::make(xs.front(), h, std::move(vals), -1.0, 1.0,
                            GridFunction::Decay::none,
                            std::numeric_limits<double>::infinity());
}

ContinuationResult continuation_in_s(const Nonlinearity& nl,
                                     const std::vector<double>& s_list,
                                     const HalfStripMesh& mesh_template,
                                     const LayerOptions& opts) {
  for (std::size_t k = 0; k + 1 < s_list.size(); ++k)
    if (!(s_list[k] < s_list[k + 1]))
      throw std::invalid_argument("continuation_in_s: s_list must be ascending");

  ContinuationResult out;
  LayerOptions local = opts;
  for (double s : s_list) {
    const FracOrder order = FracOrder::make(s);
    HalfStripMesh mesh = HalfStripMesh::strip(mesh_template.x1, mesh_template.Y,
                                              mesh_template.nx, mesh_template.ny,
                                              order.a);
    local.warm_start = out.layers.empty() ? nullptr : &out.layers.back().trace;
    LayerSolution sol = solve_layer(nl, order, mesh, local);
    if (!sol.stats.converged) {
      out.errors_nonincreasing = false;
      return out; // partial results
    }

    // sup error against the classical layer on |x| <= 5
    std::vector<double> xs;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < sol.trace.size(); ++i)
      if (std::abs(sol.trace.x(i)) <= 5.0) {
        xs.push_back(sol.trace.x(i));
        ids.push_back(i);
      }
    const std::vector<double> ode = ode_layer_values(nl, xs);
    double err = 0.0;
    for (std::size_t k = 0; k < ids.size(); ++k)
      err = std::max(err, std::abs(sol.trace.values[ids[k]] - ode[k]));
    out.ode_sup_error.push_back(err);
    out.layers.push_back(std::move(sol));
  }

  for (std::size_t k = 0; k + 1 < s_list.size(); ++k)
    if (s_list[k] >= 0.7 &&
        out.ode_sup_error[k + 1] > 1.1 * out.ode_sup_error[k])
      out.errors_nonincreasing = false;
  return out;
}

RadialSolution solve_radial(const Nonlinearity& nl, const FracOrder& order,
                            int dimension, const HalfStripMesh& mesh,
                            const RadialOptions& opts) {
  if (dimension < 2) throw std::invalid_argument("solve_radial: dimension must be >= 2");
  if (!mesh.is_radial()) throw std::invalid_argument("solve_radial: radial mesh required");
  if (std::abs(nl.f(0.0)) > 1e-12)
    throw std::invalid_argument("solve_radial: needs f(0) = 0");

  DirichletMask dir;
  dir.right = true;
  BoundaryData bd;
  bd.right.assign(mesh.ny + 1, 0.0);
  auto sys = build_schur(mesh, dir, &bd);
  const int nt = sys->n_trace();
  const double opa = 1.0 + mesh.a;

  Eigen::VectorXd mass(nt);
  for (int k = 0; k < nt; ++k) mass[k] = sys->as.trace_mass[k];

  // linear split f(v) = f'(0) v + N(v); the massive part joins the operator
  const double fp0 = nl.fprime(0.0);
  Eigen::MatrixXd L = sys->S;
  for (int k = 0; k < nt; ++k) L(k, k) -= mass[k] * fp0 / opa;
  Eigen::PartialPivLU<Eigen::MatrixXd> Lfac(L);
  auto Nterm = [&](const Eigen::VectorXd& t) {
    Eigen::VectorXd b(nt);
    for (int k = 0; k < nt; ++k)
      b[k] = mass[k] * (nl.f(t[k]) - fp0 * t[k]) / opa;
    return b;
  };

  Eigen::VectorXd t(nt);
  for (int k = 0; k < nt; ++k) {
    const double r = mesh.x(sys->as.trace_cols[k]);
    t[k] = opts.init_amplitude * std::exp(-(r / opts.init_width) * (r / opts.init_width));
  }

  // renormalized fixed point (cubic-type exponent 3/2)
  LinearSystemStats st;
  int pit = 0;
  for (; pit < opts.max_power_iters; ++pit) {
    Eigen::VectorXd b = Nterm(t);
    const double num = t.dot(L * t);
    const double den = t.dot(b);
    if (den <= 0.0 || !(num > 0.0)) break;
    const double mk = num / den;
    Eigen::VectorXd tn = std::pow(mk, 1.5) * Lfac.solve(b);
    const double diff = (tn - t).cwiseAbs().maxCoeff();
    t = tn;
    if (diff < 1e-12) break;
  }

  // damped Newton polish on the full trace residual
  auto residual = [&](const Eigen::VectorXd& tv) {
    Eigen::VectorXd r = sys->S * tv - sys->q;
    for (int k = 0; k < nt; ++k) r[k] -= mass[k] * nl.f(tv[k]) / opa;
    return r;
  };
  const double ref = 1.0 + sys->q.cwiseAbs().maxCoeff();
  bool ok = false;
  int it = 0;
  for (; it < opts.max_newton; ++it) {
    Eigen::VectorXd r = residual(t);
    if (r.cwiseAbs().maxCoeff() <= 1e-11 * ref) { ok = true; break; }
    Eigen::MatrixXd J = sys->S;
    for (int k = 0; k < nt; ++k) J(k, k) -= mass[k] * nl.fprime(t[k]) / opa;
    Eigen::VectorXd step = J.partialPivLu().solve(-r);
    const double rn0 = r.squaredNorm();
    double alpha = 1.0;
    for (int ls = 0; ls < 30; ++ls) {
      Eigen::VectorXd tn = t + alpha * step;
      if (residual(tn).squaredNorm() <= (1.0 - 0.25 * alpha) * rn0 || alpha < 1e-5)
        break;
      alpha *= 0.5;
    }
    t += alpha * step;
    if (alpha == 1.0 && step.cwiseAbs().maxCoeff() < 1e-13 * std::max(1.0, t.cwiseAbs().maxCoeff())) {
      ok = true;
      ++it;
      break;
    }
  }
  st.iterations = pit + it;
  st.converged = ok || residual(t).cwiseAbs().maxCoeff() <= 1e-9 * ref;
  st.residual_norm = residual(t).cwiseAbs().maxCoeff() / ref;

  RadialSolution sol;
  sol.order = order;
  sol.dimension = dimension;
  sol.stats = st;
  sol.field = HalfStripField(mesh);
  Eigen::VectorXd w = sys->recover(t);
  const Assembled& as = sys->as;
  for (int i = 0; i <= mesh.nx; ++i)
    for (int j = 0; j <= mesh.ny; ++j) {
      const int p = as.index[as.node(mesh, i, j)];
      sol.field.values(i, j) = p < 0 ? 0.0
                               : (p < nt ? t[p] : w[p - nt]);
    }
  sol.profile = sol.field.trace();
  sol.profile.right_asymptote = 0.0;
  sol.nontrivial = st.converged && sol.profile.values[0] > 1e-6;
  return sol;
}

} // namespace frlap
