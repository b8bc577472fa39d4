#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "frlap/grid_function.hpp"
#include "frlap/mesh.hpp"

namespace frlap {

// Discrete extension field u(x_i, y_j) on a half-strip mesh.
struct HalfStripField {
  HalfStripMesh mesh;
  Eigen::MatrixXd values; // (nx+1) x (ny+1), column j = horizontal slice

  HalfStripField() = default;
  explicit HalfStripField(const HalfStripMesh& m)
      : mesh(m), values(Eigen::MatrixXd::Zero(m.nx + 1, m.ny + 1)) {}

  GridFunction trace() const;

  // Two-term boundary fit u ~ u(x,0) + c y^{1-a} + d y^2 on the first two
  // y-nodes. Naive one-sided differencing of y^a u_y diverges for a > 0.
  void boundary_fit(std::vector<double>& c, std::vector<double>& d) const;

  // -y^a du/dy at y = 0 from the fit: -(1-a) c(x).
  std::vector<double> flux_trace() const;
};

void write_field(const HalfStripField& f, const std::string& csv_path,
                 const std::vector<std::pair<std::string, double>>& extra = {});
HalfStripField read_field(const std::string& csv_path);

} // namespace frlap
