#include "frlap/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace frlap {

GridFunction HalfStripField::trace() const {
  std::vector<double> v(mesh.nx + 1);
  for (int i = 0; i <= mesh.nx; ++i) v[i] = values(i, 0);
  return GridFunction::make(mesh.x0, mesh.hx, std::move(v), std::nullopt,
                            std::nullopt, GridFunction::Decay::none,
                            std::numeric_limits<double>::infinity());
}

void HalfStripField::boundary_fit(std::vector<double>& c, std::vector<double>& d) const {
  const double a = mesh.a, p = 1.0 - a;
  const double y1 = mesh.y[1], y2 = mesh.y[2];
  c.assign(mesh.nx + 1, 0.0);
  d.assign(mesh.nx + 1, 0.0);
  const bool degenerate = std::abs(2.0 - p) < 0.05; // y^{1-a} and y^2 collide as a -> -1
  const double y1p = std::pow(y1, p), y2p = std::pow(y2, p);
  const double det = y1p * y2 * y2 - y2p * y1 * y1;
  for (int i = 0; i <= mesh.nx; ++i) {
    const double d1 = values(i, 1) - values(i, 0);
    const double d2 = values(i, 2) - values(i, 0);
    if (degenerate) {
      c[i] = d1 / y1p;
      d[i] = 0.0;
    } else {
      c[i] = (d1 * y2 * y2 - d2 * y1 * y1) / det;
      d[i] = (-d1 * y2p + d2 * y1p) / det;
    }
  }
}

std::vector<double> HalfStripField::flux_trace() const {
  std::vector<double> c, d;
  boundary_fit(c, d);
  const double p = 1.0 - mesh.a;
  for (auto& ci : c) ci *= -p;
  return c;
}

namespace {
std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
} // namespace

void write_field(const HalfStripField& f, const std::string& csv_path,
                 const std::vector<std::pair<std::string, double>>& extra) {
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot open " + csv_path);
  out << "i,j,x,y,value\n";
  for (int i = 0; i <= f.mesh.nx; ++i)
    for (int j = 0; j <= f.mesh.ny; ++j)
      out << i << ',' << j << ',' << fmt_g17(f.mesh.x(i)) << ','
          << fmt_g17(f.mesh.y[j]) << ',' << fmt_g17(f.values(i, j)) << '\n';
  out.close();

  nlohmann::ordered_json meta;
  meta["x0"] = f.mesh.x0;
  meta["x1"] = f.mesh.x1;
  meta["Y"] = f.mesh.Y;
  meta["nx"] = f.mesh.nx;
  meta["ny"] = f.mesh.ny;
  meta["grading"] = f.mesh.grading;
  meta["a"] = f.mesh.a;
  meta["dim"] = f.mesh.dim;
  for (const auto& [k, v] : extra) meta[k] = v;
  std::ofstream js(csv_path + ".json");
  js << meta.dump(2) << '\n';
}

HalfStripField read_field(const std::string& csv_path) {
  std::ifstream js(csv_path + ".json");
  if (!js) throw std::runtime_error("missing sidecar for " + csv_path);
  nlohmann::json meta = nlohmann::json::parse(js);
  const int dim = meta.value("dim", 1);
  HalfStripMesh m;
  if (dim == 1)
    m = HalfStripMesh::strip(meta["x1"].get<double>(), meta["Y"].get<double>(),
                             meta["nx"].get<int>(), meta["ny"].get<int>(),
                             meta["a"].get<double>(), meta["grading"].get<double>());
  else
    m = HalfStripMesh::radial(meta["x1"].get<double>(), meta["Y"].get<double>(),
                              meta["nx"].get<int>(), meta["ny"].get<int>(),
                              meta["a"].get<double>(), dim,
                              meta["grading"].get<double>());
  HalfStripField f(m);
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    int i = 0, j = 0;
    double x, y, val;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf,%lf", &i, &j, &x, &y, &val) == 5)
      f.values(i, j) = val;
  }
  return f;
}

} // namespace frlap
