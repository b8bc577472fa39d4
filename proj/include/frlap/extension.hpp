#pragma once

#include <cstdint>
#include <optional>

#include "frlap/assemble.hpp"
#include "frlap/field.hpp"
#include "frlap/fraclap.hpp"
#include "frlap/kernels.hpp"
#include "frlap/nonlinearity.hpp"

namespace frlap {

struct LinearSystemStats {
  int iterations = 0;
  double residual_norm = 0.0;
  bool assembly_symmetric = true;
  bool converged = true;
};

// Poisson extension u(.,y) = P_s(.,y) * v evaluated at one point. v is read
// through linear interpolation inside its window and through its declared
// asymptotes outside.
double poisson_extend_at(const GridFunction& v, const FracOrder& order,
                         double x, double y);

HalfStripField extend_by_convolution(const GridFunction& v, const FracOrder& order,
                                     const HalfStripMesh& mesh, int threads = 1);

// Dirichlet data on all four sides; sparse L D L^T solve of the SPD system.
std::pair<HalfStripField, LinearSystemStats>
solve_dirichlet(const HalfStripMesh& mesh, const BoundaryData& data);

// Discrete Dirichlet-to-Neumann: extend v (convolution values on the top and
// side boundaries unless an override is supplied), solve, read the weighted
// flux from the boundary fit. d_s * dtn_apply approximates (-Delta)^s v.
GridFunction dtn_apply(const GridFunction& v, const FracOrder& order,
                       const HalfStripMesh& mesh,
                       const BoundaryData* boundary_override = nullptr);

enum class SideBC { dirichlet_asymptotes, reflect };
enum class Strategy { newton, gradient_flow };

struct NonlinearOptions {
  Strategy strategy = Strategy::newton;
  // Reflecting side walls keep the conserved Hamiltonian offset quadratic in
  // the truncated tail; Dirichlet walls inject the wall column's kinetic
  // energy, which decays only like X^{-4s}.
  SideBC sides = SideBC::reflect;
  double side_left = -1.0, side_right = 1.0; // used by dirichlet_asymptotes
  bool pin_center = true;                    // trace(0) = 0 via a multiplier
  double tol = 1e-11;                        // scaled residual
  int max_iter = 60;
  int flow_max_iter = 50000;
};

// Nonlinear Neumann solve of div(y^a grad u) = 0, (1+a) du/dnu^a = f(u) on
// {y=0}, weighted-Neumann top. Newton runs on the bottom-trace unknowns
// through the dense Schur complement of the interior block; gradient_flow
// does monotone Armijo descent on the reduced energy.
std::pair<HalfStripField, LinearSystemStats>
solve_neumann_nonlinear(const Nonlinearity& nl, const FracOrder& order,
                        const HalfStripMesh& mesh, const HalfStripField& init,
                        const NonlinearOptions& opts = {});

// Bottom-row flux implied by the finite-volume balance itself: the quantity
// the nonlinear boundary condition is enforced against. The fitted
// flux_trace() estimates the continuum flux instead and carries the
// discretization gap between the two representations.
std::vector<double> scheme_flux_trace(const HalfStripField& u);

struct DualField {
  HalfStripField w;           // conjugate on the -a mesh
  double divergence_residual; // max scaled interior residual of div(y^{-a} grad w)
};

// w = -y^a du/dy solves the conjugate equation div(y^{-a} grad w) = 0.
DualField dual_conjugate(const HalfStripField& u);

// E_{B_R^+}(u): cell quadrature of (1/2) y^a |grad u|^2 over the half-ball
// plus the G(u)/(1+a) boundary term.
double energy(const HalfStripField& u, const Nonlinearity& nl, double R);

} // namespace frlap
