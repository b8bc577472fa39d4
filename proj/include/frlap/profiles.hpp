#pragma once

#include <vector>

#include "frlap/extension.hpp"

namespace frlap {

struct LayerSolution {
  GridFunction trace;
  HalfStripField field;
  FracOrder order;
  bool pinned_at_zero = true;
  LinearSystemStats stats;
  bool monotone = false;           // verified, never projected
  double boundary_residual = 0.0;  // sup |(1+a) flux_trace - f(trace)|
  double effective_scale = 1.0;    // factor the reaction was divided by
};

struct LayerOptions {
  // Divide f by d_s/(2(1-s)) so the trace solves the nonlocal equation with
  // the PV normalization exactly rather than up to that constant.
  bool scale_to_fraclap = false;
  NonlinearOptions solver;
  double init_width = 0.0;                 // 0 = sqrt(2 / max G'') heuristic
  const GridFunction* warm_start = nullptr; // overrides the tanh initial guess
};

LayerSolution solve_layer(const Nonlinearity& nl, const FracOrder& order,
                          const HalfStripMesh& mesh, const LayerOptions& opts = {});

// Classical layer of -v'' = f(v) by quadrature of x(v) = int dw / sqrt(2 (G - G(1)))
// inverted onto the sample points; v(0) = 0.
GridFunction solve_ode_layer(const Nonlinearity& nl, const std::vector<double>& xs);
std::vector<double> ode_layer_values(const Nonlinearity& nl, const std::vector<double>& xs);

struct ContinuationResult {
  std::vector<LayerSolution> layers;
  std::vector<double> ode_sup_error; // sup |trace - ODE layer| on |x| <= 5
  bool errors_nonincreasing = true;  // over entries with s >= 0.7, 10% slack
};

ContinuationResult continuation_in_s(const Nonlinearity& nl,
                                     const std::vector<double>& s_list,
                                     const HalfStripMesh& mesh_template,
                                     const LayerOptions& opts = {});

struct RadialSolution {
  GridFunction profile;
  HalfStripField field;
  FracOrder order;
  int dimension = 2;
  bool nontrivial = false; // false: converged to the zero solution
  LinearSystemStats stats;
};

struct RadialOptions {
  double init_amplitude = 2.2;
  double init_width = 2.0;
  int max_power_iters = 400; // renormalized fixed-point warm start
  int max_newton = 30;
};

// Ground-state-type radial solve for reactions with f(0) = 0, f'(0) < 0 and
// a focusing cubic tail. The Schur trace system is condensed once; a
// renormalized fixed-point iteration walks into the bump's basin and damped
// Newton polishes. Convergence to zero is reported, not claimed as success.
RadialSolution solve_radial(const Nonlinearity& nl, const FracOrder& order,
                            int dimension, const HalfStripMesh& mesh,
                            const RadialOptions& opts = {});

} // namespace frlap
