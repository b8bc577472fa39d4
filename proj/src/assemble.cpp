#include "frlap/assemble.hpp"

#include <stdexcept>

namespace frlap {

Assembled assemble(const HalfStripMesh& m, const DirichletMask& dir,
                   const BoundaryData* data) {
  const int nx = m.nx, ny = m.ny;
  const bool need_data = dir.bottom || dir.top || dir.left || dir.right;
  if (need_data && data == nullptr)
    throw std::invalid_argument("assemble: Dirichlet sides need boundary data");
  if (m.is_radial() && dir.left)
    throw std::invalid_argument("assemble: radial meshes reflect at the axis");

  Assembled as;
  as.index.assign((nx + 1) * (ny + 1), -1);

  auto dirichlet = [&](int i, int j) {
    if (dir.left && i == 0) return true;
    if (dir.right && i == nx) return true;
    if (dir.bottom && j == 0) return true;
    if (dir.top && j == ny) return true;
    return false;
  };
  auto dirichlet_value = [&](int i, int j) -> double {
    // corners prefer the side columns so side data stays a full column
    if (dir.left && i == 0) return data->left[j];
    if (dir.right && i == nx) return data->right[j];
    if (dir.bottom && j == 0) return data->bottom[i];
    return data->top[i];
  };

  // trace block: non-Dirichlet bottom nodes
  if (!dir.bottom) {
    for (int i = 0; i <= nx; ++i) {
      if (dirichlet(i, 0)) continue;
      as.index[as.node(m, i, 0)] = as.n_trace;
      as.trace_cols.push_back(i);
      as.trace_mass.push_back(m.wx_cell(i));
      ++as.n_trace;
    }
  }
  for (int i = 0; i <= nx; ++i)
    for (int j = (dir.bottom ? 0 : 1); j <= ny; ++j) {
      if (dirichlet(i, j)) continue;
      as.index[as.node(m, i, j)] = as.n_trace + as.n_rest;
      ++as.n_rest;
    }

  std::vector<Eigen::Triplet<double>> tt, tw, ww;
  as.rhs_t = Eigen::VectorXd::Zero(as.n_trace);
  as.rhs_w = Eigen::VectorXd::Zero(as.n_rest);

  // precompute row/column weights
  std::vector<double> wy(ny + 1), tyf(ny), wx(nx + 1), rf(nx);
  for (int j = 0; j <= ny; ++j) wy[j] = m.wy_cell(j);
  for (int j = 0; j < ny; ++j) tyf[j] = m.ty_face(j);
  for (int i = 0; i <= nx; ++i) wx[i] = m.wx_cell(i);
  for (int i = 0; i < nx; ++i) rf[i] = m.rho_face(i);

  double diag_acc = 0.0;
  int diag_n = 0;

  auto couple = [&](int p, int i2, int j2, double t) {
    // p is a global unknown id; (i2,j2) the neighbour node
    const bool p_is_trace = p < as.n_trace;
    const int pl = p_is_trace ? p : p - as.n_trace; // local row in its block
    const int q = as.index[as.node(m, i2, j2)];
    // diagonal
    if (p_is_trace)
      tt.emplace_back(pl, pl, t);
    else
      ww.emplace_back(pl, pl, t);
    if (q >= 0) {
      const bool q_is_trace = q < as.n_trace;
      const int ql = q_is_trace ? q : q - as.n_trace;
      if (p_is_trace && q_is_trace)
        tt.emplace_back(pl, ql, -t);
      else if (!p_is_trace && !q_is_trace)
        ww.emplace_back(pl, ql, -t);
      else if (p_is_trace)
        tw.emplace_back(pl, ql, -t); // q in rest
      // the symmetric (rest, trace) entry comes from q's own row
    } else {
      const double g = dirichlet_value(i2, j2);
      if (p_is_trace)
        as.rhs_t[pl] += t * g;
      else
        as.rhs_w[pl] += t * g;
    }
  };

  for (int i = 0; i <= nx; ++i) {
    for (int j = 0; j <= ny; ++j) {
      const int p = as.index[as.node(m, i, j)];
      if (p < 0) continue;
      double diag = 0.0;
      if (i > 0) {
        const double t = wy[j] * rf[i - 1] / m.hx;
        couple(p, i - 1, j, t);
        diag += t;
      }
      if (i < nx) {
        const double t = wy[j] * rf[i] / m.hx;
        couple(p, i + 1, j, t);
        diag += t;
      }
      if (j < ny) {
        const double t = wx[i] * tyf[j];
        couple(p, i, j + 1, t);
        diag += t;
      }
      if (j > 0) {
        const double t = wx[i] * tyf[j - 1];
        couple(p, i, j - 1, t);
        diag += t;
      }
      diag_acc += diag;
      ++diag_n;
    }
  }

  as.A_tt.resize(as.n_trace, as.n_trace);
  as.A_tt.setFromTriplets(tt.begin(), tt.end());
  as.A_tw.resize(as.n_trace, as.n_rest);
  as.A_tw.setFromTriplets(tw.begin(), tw.end());
  as.A_ww.resize(as.n_rest, as.n_rest);
  as.A_ww.setFromTriplets(ww.begin(), ww.end());
  as.diag_scale = diag_n > 0 ? diag_acc / diag_n : 1.0;
  return as;
}

} // namespace frlap
