#pragma once

#include <vector>

namespace frlap {

// Tensor mesh of the truncated half strip: uniform in x, graded in y with
// y_j = Y (j/ny)^grading. For dim >= 2 the x-coordinate is the radius r in
// [0, R] and every face/cell weight carries the factor r^{dim-1}.
struct HalfStripMesh {
  double x0 = 0.0;   // left end (-X for strips, 0 for radial meshes)
  double x1 = 0.0;   // right end
  double Y = 0.0;
  int nx = 0, ny = 0;
  double grading = 1.0;
  double a = 0.0;    // weight exponent in (-1,1)
  int dim = 1;

  double hx = 0.0;
  std::vector<double> y;      // ny+1 nodes, y[0] = 0, y[ny] = Y
  std::vector<double> yhalf;  // ny+2 control-volume bounds, yhalf[0]=0, yhalf[ny+1]=Y

  static HalfStripMesh strip(double X, double Y, int nx, int ny, double a,
                             double grading = 0.0 /* 0 = default rule */);
  static HalfStripMesh radial(double R, double Y, int nr, int ny, double a,
                              int dim, double grading = 0.0);

  // Grading rule 2/(1+a) clipped to [1,4], further capped so that the first
  // cell's transmissibility 1/y_1^{1-a} stays within direct-solver range.
  static double default_grading(double a, int ny, double Y);

  double x(int i) const { return x0 + hx * i; }

  double wy_cell(int j) const;   // int t^a over the y-CV of row j
  double ty_face(int j) const;   // 1 / int_{y_j}^{y_{j+1}} t^{-a} dt
  double wx_cell(int i) const;   // int rho over the x-CV of column i
  double rho_face(int i) const;  // rho at x_{i+1/2}

  bool is_radial() const { return dim >= 2; }

private:
  void finalize();
};

} // namespace frlap
