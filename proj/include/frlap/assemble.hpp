#pragma once

#include <Eigen/Sparse>
#include <vector>

#include "frlap/mesh.hpp"

namespace frlap {

using SpMat = Eigen::SparseMatrix<double>;

// Dirichlet data per side; only the sides flagged Dirichlet are read.
struct BoundaryData {
  std::vector<double> bottom; // nx+1
  std::vector<double> top;    // nx+1
  std::vector<double> left;   // ny+1
  std::vector<double> right;  // ny+1
};

struct DirichletMask {
  bool bottom = false, top = false, left = false, right = false;
};

// Finite-volume operator for div(rho(x) y^a grad u) = 0 on the tensor mesh.
// Horizontal faces carry the exact integral of y^a over the face segment;
// vertical coupling uses the flux-exact transmissibility 1/int y^{-a} dy so
// the y^{1-a} boundary profile is reproduced without loss. Sides that are not
// Dirichlet are homogeneous weighted-Neumann (no face term). Unknowns are
// ordered with non-Dirichlet bottom-row nodes (the trace block) first.
struct Assembled {
  SpMat A_tt, A_tw, A_ww;     // trace/trace, trace/rest, rest/rest blocks
  Eigen::VectorXd rhs_t, rhs_w;
  std::vector<int> index;     // (nx+1)*(ny+1) node -> unknown id, -1 Dirichlet
  int n_trace = 0;
  int n_rest = 0;
  std::vector<int> trace_cols;      // x-index per trace unknown
  std::vector<double> trace_mass;   // bottom CV measure per trace unknown
  double diag_scale = 1.0;          // typical diagonal, for residual scaling

  int node(const HalfStripMesh& m, int i, int j) const { return i * (m.ny + 1) + j; }
};

Assembled assemble(const HalfStripMesh& m, const DirichletMask& dir,
                   const BoundaryData* data);

} // namespace frlap
