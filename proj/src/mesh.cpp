#include "frlap/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frlap {

double HalfStripMesh::default_grading(double a, int ny, double Y) {
  double g = std::clamp(2.0 / (1.0 + a), 1.0, 4.0);
  // keep y_1^{1-a} >= 1e-7 * Y^{1-a}: the Schur elimination subtracts the
  // first-cell transmissibility, and a smaller first cell burns the digits
  // the boundary-residual contract needs
  const double cap = 7.0 * std::log(10.0) / ((1.0 - a) * std::log(static_cast<double>(ny)));
  (void)Y;
  return std::max(1.0, std::min(g, cap));
}

HalfStripMesh HalfStripMesh::strip(double X, double Y, int nx, int ny, double a,
                                   double grading) {
  if (!(X > 0.0 && Y > 0.0)) throw std::invalid_argument("mesh: X, Y must be > 0");
  if (nx < 8 || ny < 8) throw std::invalid_argument("mesh: nx, ny must be >= 8");
  if (!(a > -1.0 && a < 1.0)) throw std::invalid_argument("mesh: a outside (-1,1)");
  HalfStripMesh m;
  m.x0 = -X;
  m.x1 = X;
  m.Y = Y;
  m.nx = nx;
  m.ny = ny;
  m.a = a;
  m.dim = 1;
  m.grading = grading > 0.0 ? grading : default_grading(a, ny, Y);
  m.finalize();
  return m;
}

HalfStripMesh HalfStripMesh::radial(double R, double Y, int nr, int ny, double a,
                                    int dim, double grading) {
  if (dim < 2) throw std::invalid_argument("mesh: radial meshes need dim >= 2");
  HalfStripMesh m = strip(R, Y, nr, ny, a, grading); // validates sizes
  m.x0 = 0.0;
  m.x1 = R;
  m.dim = dim;
  m.finalize();
  return m;
}

void HalfStripMesh::finalize() {
  hx = (x1 - x0) / nx;
  y.assign(ny + 1, 0.0);
  for (int j = 0; j <= ny; ++j)
    y[j] = Y * std::pow(static_cast<double>(j) / ny, grading);
  yhalf.assign(ny + 2, 0.0);
  for (int j = 1; j <= ny; ++j) yhalf[j] = 0.5 * (y[j - 1] + y[j]);
  yhalf[ny + 1] = Y;
}

double HalfStripMesh::wy_cell(int j) const {
  const double p = 1.0 + a;
  return (std::pow(yhalf[j + 1], p) - std::pow(yhalf[j], p)) / p;
}

double HalfStripMesh::ty_face(int j) const {
  const double p = 1.0 - a;
  return p / (std::pow(y[j + 1], p) - std::pow(y[j], p));
}

double HalfStripMesh::wx_cell(int i) const {
  const double lo = i == 0 ? x(0) : x(i) - 0.5 * hx;
  const double hi = i == nx ? x(nx) : x(i) + 0.5 * hx;
  if (dim == 1) return hi - lo;
  return (std::pow(hi, dim) - std::pow(lo, dim)) / dim;
}

double HalfStripMesh::rho_face(int i) const {
  if (dim == 1) return 1.0;
  return std::pow(x(i) + 0.5 * hx, dim - 1);
}

} // namespace frlap
