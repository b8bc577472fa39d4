#pragma once

#include <Eigen/Dense>
#include <vector>

#include "frlap/profiles.hpp"

namespace frlap {

// H(x) = (1+a) int_0^Y (t^a/2) (u_x^2 - u_y^2) dt with the cumulative partial
// integrals W(x, y_j) and a decay-based bound on the mass beyond Y.
struct HamiltonianProfile {
  std::vector<double> xs;
  std::vector<double> H;
  Eigen::MatrixXd partial;        // (nx+1) x (ny+1), column j = W(., y_j)
  std::vector<double> tail_bound; // per x, from |grad u| <= C2 / y
  // x-part and y-part of the full integral, kept separate for the s -> 1 split
  std::vector<double> x_part, y_part;
};

HamiltonianProfile hamiltonian_profile(const HalfStripField& u, const FracOrder& order);

struct IdentityReport {
  double max_residual = 0.0; // sup_x |H - (G(trace) - G(1))|
  double g_level_diff = 0.0; // |G(1) - G(-1)|
};

IdentityReport verify_identity(const LayerSolution& layer, const Nonlinearity& nl);

struct ModicaReport {
  double min_margin_all = 0.0;    // over every mesh node
  double min_margin_strict = 0.0; // over |trace| <= 0.9 and y <= Y/2
  int strict_nodes = 0;
  double gap0 = 0.0;              // G(0) - G(1) scale
};

// margin(x, y) = (G(trace(x)) - G(1)) - W(x, y). The strict set stays below
// Y/2: the top partial equals the conserved profile itself, so its margin is
// pure quadrature noise on a truncated mesh.
ModicaReport verify_modica(const LayerSolution& layer, const Nonlinearity& nl);

struct RadialHamiltonianReport {
  std::vector<double> rs;
  std::vector<double> profile;    // (1+a) int (t^a/2)(u_r^2 - u_y^2) - G(u(r,0))
  bool monotone_pass = false;
  double max_increase = 0.0;
  double deriv_match_rel = 0.0;   // worst relative gap to the closed-form slope
  double g_origin_gap = 0.0;      // G(0) - G(v(0))
};

RadialHamiltonianReport radial_hamiltonian(const RadialSolution& rad,
                                           const Nonlinearity& nl);

struct SLimitReport {
  std::vector<double> s_values;
  std::vector<double> x_probe;
  // [probe][s]
  std::vector<std::vector<double>> x_part, y_part;
  std::vector<double> ode_target; // (1/2) v'(x)^2 of the classical layer
  bool y_part_decreasing = true;
  double x_part_rel_err_last = 0.0; // at the largest s, worst probe
  bool pass = false;
};

// Split Hamiltonian across an ascending-in-s family of layers: the y-part
// must sink to zero and the x-part must land on the classical (1/2) v'^2.
SLimitReport s_limit_split(const std::vector<LayerSolution>& layers,
                           const std::vector<double>& x_probe,
                           const Nonlinearity& nl);

} // namespace frlap
