#include "frlap/properties.hpp"

#include <Eigen/SparseLU>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frlap {

namespace {

// splitmix64: portable deterministic stream, independent of libstdc++
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

} // namespace

MaxPrincipleReport check_max_principle(const HalfStripField& u) {
  MaxPrincipleReport r;
  r.min_interior = 0.0;
  for (int i = 1; i < u.mesh.nx; ++i)
    for (int j = 1; j < u.mesh.ny; ++j)
      r.min_interior = std::min(r.min_interior, u.values(i, j));
  r.pass = r.min_interior >= -1e-12;
  return r;
}

double estimate_harnack(const FracOrder& order, int trials, std::uint64_t seed,
                        const HarnackOptions& opts) {
  if (trials < 1) throw std::invalid_argument("estimate_harnack: trials >= 1");
  const double W = opts.half_width;
  HalfStripMesh mesh = HalfStripMesh::strip(W, W, opts.nx, opts.ny, order.a);
  Rng rng(seed);

  double worst = 1.0;
  int accepted = 0, attempts = 0;
  while (accepted < trials && attempts < 20 * trials) {
    ++attempts;
    // random smooth Robin coefficient, |d| <= d_bound
    double cd[5], sd[5];
    double amp = 0.0;
    for (int k = 0; k < 5; ++k) {
      cd[k] = rng.uniform(-1.0, 1.0);
      sd[k] = rng.uniform(-1.0, 1.0);
      amp += std::abs(cd[k]) + std::abs(sd[k]);
    }
    auto dfun = [&](double x) {
      double v = 0.0;
      for (int k = 0; k < 5; ++k)
        v += cd[k] * std::cos(k * M_PI * x / W) + sd[k] * std::sin(k * M_PI * x / W);
      return opts.d_bound * v / amp;
    };
    // random positive data on sides and top
    double pc[3];
    for (auto& c : pc) c = rng.uniform(-1.0, 1.0);
    auto pos = [&](double x, double y) {
      return std::exp(pc[0] * std::sin(M_PI * x / W) + pc[1] * std::cos(M_PI * y / W) +
                      pc[2] * std::sin(0.5 * M_PI * (x + y) / W));
    };

    DirichletMask dir{false, true, true, true};
    BoundaryData bd;
    bd.top.resize(mesh.nx + 1);
    bd.left.resize(mesh.ny + 1);
    bd.right.resize(mesh.ny + 1);
    for (int i = 0; i <= mesh.nx; ++i) bd.top[i] = pos(mesh.x(i), mesh.Y);
    for (int j = 0; j <= mesh.ny; ++j) {
      bd.left[j] = pos(mesh.x0, mesh.y[j]);
      bd.right[j] = pos(mesh.x1, mesh.y[j]);
    }
    Assembled as = assemble(mesh, dir, &bd);

    // Robin term d(nu^a) u + d u = 0  =>  -y^a u_y = -d u at y = 0
    SpMat A = as.A_tt;
    for (int k = 0; k < as.n_trace; ++k)
      A.coeffRef(k, k) += as.trace_mass[k] * dfun(mesh.x(as.trace_cols[k]));
    // assemble full system [tt tw; wt ww] and solve directly
    const int n = as.n_trace + as.n_rest;
    std::vector<Eigen::Triplet<double>> tri;
    for (int k = 0; k < A.outerSize(); ++k)
      for (SpMat::InnerIterator it(A, k); it; ++it)
        tri.emplace_back(it.row(), it.col(), it.value());
    for (int k = 0; k < as.A_tw.outerSize(); ++k)
      for (SpMat::InnerIterator it(as.A_tw, k); it; ++it) {
        tri.emplace_back(it.row(), as.n_trace + it.col(), it.value());
        tri.emplace_back(as.n_trace + it.col(), it.row(), it.value());
      }
    for (int k = 0; k < as.A_ww.outerSize(); ++k)
      for (SpMat::InnerIterator it(as.A_ww, k); it; ++it)
        tri.emplace_back(as.n_trace + it.row(), as.n_trace + it.col(), it.value());
    SpMat full(n, n);
    full.setFromTriplets(tri.begin(), tri.end());
    Eigen::VectorXd rhs(n);
    rhs.head(as.n_trace) = as.rhs_t;
    rhs.tail(as.n_rest) = as.rhs_w;
    Eigen::SparseLU<SpMat> lu(full);
    if (lu.info() != Eigen::Success) continue;
    Eigen::VectorXd sol = lu.solve(rhs);

    // ratio on the unit half-ball
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i <= mesh.nx; ++i)
      for (int j = 0; j <= mesh.ny; ++j) {
        const double x = mesh.x(i), y = mesh.y[j];
        if (x * x + y * y > 1.0) continue;
        const int p = as.index[as.node(mesh, i, j)];
        if (p < 0) continue;
        lo = std::min(lo, sol[p]);
        hi = std::max(hi, sol[p]);
      }
    if (!(lo > 1e-12)) continue; // degenerate trial, resample
    ++accepted;
    worst = std::max(worst, hi / lo);
  }
  if (accepted < trials)
    throw std::runtime_error("estimate_harnack: too many degenerate trials");
  return worst;
}

double check_hopf(const HalfStripField& u, int i0) {
  const HalfStripMesh& m = u.mesh;
  if (i0 < 0 || i0 > m.nx) throw std::invalid_argument("check_hopf: bad index");
  const double scale = u.values.cwiseAbs().maxCoeff();
  if (scale == 0.0)
    throw std::invalid_argument("check_hopf: field is identically zero");
  if (std::abs(u.values(i0, 0)) > 1e-10 * scale)
    throw std::invalid_argument("check_hopf: u does not vanish at the named point");
  double min_all = 0.0, min_int = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= m.nx; ++i)
    for (int j = 0; j <= m.ny; ++j) {
      min_all = std::min(min_all, u.values(i, j));
      if (i > 0 && i < m.nx && j > 0 && j < m.ny)
        min_int = std::min(min_int, u.values(i, j));
    }
  if (min_all < -1e-10 * scale)
    throw std::invalid_argument("check_hopf: u is not nonnegative");
  if (!(min_int > 0.0))
    throw std::invalid_argument("check_hopf: u is not positive in the interior");
  return u.flux_trace()[i0];
}

} // namespace frlap
