#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <memory>

#include "frlap/assemble.hpp"

namespace frlap {

// Solver internals shared by the layer and radial drivers: the interior block
// is factored once and condensed onto the bottom-trace unknowns.
//
//   S t = q + (1/(1+a)) M f(t),   S = A_tt - A_tw A_ww^{-1} A_wt
struct SchurSystem {
  Assembled as;
  Eigen::SimplicialLDLT<SpMat> wfac;
  SpMat A_wt;
  Eigen::MatrixXd S;
  Eigen::VectorXd q;

  int n_trace() const { return as.n_trace; }

  // interior values for a given trace vector
  Eigen::VectorXd recover(const Eigen::VectorXd& t) const;
};

std::unique_ptr<SchurSystem> build_schur(const HalfStripMesh& mesh,
                                         const DirichletMask& dir,
                                         const BoundaryData* data);

} // namespace frlap
