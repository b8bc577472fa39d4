#include "frlap/fraclap.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace frlap {

namespace {

constexpr std::size_t kEdgeMargin = 2; // nodes whose singular-zone fit would leave the grid

struct KernelMoments {
  // per cell m = 1..M over [mh - h/2, mh + h/2]:
  //   A = int K, B = int (z - mh) K, C = int (z - mh)^2 K,  K = z^{-1-2s}
  std::vector<double> A, B, C;
  double sing_J2 = 0.0, sing_J4 = 0.0; // int z^{2,4} K over [0, 2.5 h]
  double tail_cut = 0.0;               // (M + 1/2) h
  double s = 0.0;
};

double int_pow(double lo, double hi, double p) {
  // int_lo^hi z^p dz with the log branch at p = -1
  if (std::abs(p + 1.0) < 1e-13) return std::log(hi / lo);
  return (std::pow(hi, p + 1.0) - std::pow(lo, p + 1.0)) / (p + 1.0);
}

KernelMoments make_moments(double h, double s, std::size_t M) {
  KernelMoments km;
  km.s = s;
  km.A.resize(M + 1);
  km.B.resize(M + 1);
  km.C.resize(M + 1);
  for (std::size_t m = 1; m <= M; ++m) {
    const double zm = m * h, lo = zm - 0.5 * h, hi = zm + 0.5 * h;
    const double I0 = int_pow(lo, hi, -1.0 - 2.0 * s);
    const double I1 = int_pow(lo, hi, -2.0 * s);
    const double I2 = int_pow(lo, hi, 1.0 - 2.0 * s);
    km.A[m] = I0;
    km.B[m] = I1 - zm * I0;
    km.C[m] = I2 - 2.0 * zm * I1 + zm * zm * I0;
  }
  const double zs = 2.5 * h;
  km.sing_J2 = std::pow(zs, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
  km.sing_J4 = std::pow(zs, 4.0 - 2.0 * s) / (4.0 - 2.0 * s);
  km.tail_cut = (static_cast<double>(M) + 0.5) * h;
  return km;
}

void run_chunks(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body) {
  if (threads <= 1 || n < 64) {
    body(0, n);
    return;
  }
  const std::size_t nt = std::min<std::size_t>(threads, 32);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + nt - 1) / nt;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& th : pool) th.join();
}

} // namespace

OperatorReport fraclap_pv(const GridFunction& v, const FracOrder& order, int threads) {
  if (order.n != 1) throw std::invalid_argument("fraclap_pv: only n = 1");
  const std::size_t N = v.size();
  if (N < 5) throw std::invalid_argument("fraclap_pv: need at least 5 points");
  const double s = order.s, h = v.h;
  const double C = pv_constant(1, s);

  const bool has_asym = v.left_asymptote.has_value() && v.right_asymptote.has_value();
  const double AL = v.left_asymptote.value_or(v.values.front());
  const double AR = v.right_asymptote.value_or(v.values.back());

  // Deviation of the boundary samples from the asymptote levels bounds the
  // error of the constant replacement outside the window.
  const double edge_dev = std::max(std::abs(v.values.front() - AL),
                                   std::abs(v.values.back() - AR));
  if (!has_asym) {
    // Without declared asymptotes the replacement level is the edge sample;
    // refuse when the far field visibly contributes.
    const double d_inf_max = 2.0 * (std::abs(v.values.front()) + std::abs(v.values.back())) + 1e-30;
    const double tail_mass = C * d_inf_max * std::pow(h * N, -2.0 * s) / (2.0 * s);
    double interior_scale = 0.0;
    for (double val : v.values) interior_scale = std::max(interior_scale, std::abs(val));
    if (tail_mass > 1e-10 * std::max(1.0, interior_scale) &&
        std::abs(v.values.front() - v.values.back()) > 1e-12)
      throw std::invalid_argument(
          "fraclap_pv: asymptotes undeclared and far-field tail is not negligible");
  }

  const std::size_t M = N + 2;
  const KernelMoments km = make_moments(h, s, M);

  GridFunction out = v;
  out.left_asymptote.reset();
  out.right_asymptote.reset();
  out.decay = GridFunction::Decay::none;
  std::fill(out.values.begin(), out.values.end(),
            std::numeric_limits<double>::quiet_NaN());

  auto at = [&](std::ptrdiff_t i) -> double {
    if (i < 0) return AL;
    if (i >= static_cast<std::ptrdiff_t>(N)) return AR;
    return v.values[static_cast<std::size_t>(i)];
  };

  const std::size_t first = kEdgeMargin, last = N - 1 - kEdgeMargin;
  double max_tail = 0.0;

  run_chunks(last - first + 1, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> D(M + 2);
    for (std::size_t k = lo; k < hi; ++k) {
      const std::ptrdiff_t i = static_cast<std::ptrdiff_t>(first + k);
      const double vi = v.values[static_cast<std::size_t>(i)];
      for (std::size_t m = 0; m <= M + 1; ++m)
        D[m] = 2.0 * vi - at(i + static_cast<std::ptrdiff_t>(m)) -
               at(i - static_cast<std::ptrdiff_t>(m));

      // singular zone [0, 2.5h]: even fit through D(h), D(2h)
      const double h2 = h * h, h4 = h2 * h2;
      const double det = 12.0 * h4 * h2;
      const double c2 = (16.0 * h4 * D[1] - h4 * D[2]) / det;
      const double c4 = (h2 * D[2] - 4.0 * h2 * D[1]) / det;
      double acc = c2 * km.sing_J2 + c4 * km.sing_J4;

      // cell-wise parabola against exact kernel moments
      for (std::size_t m = 3; m <= M; ++m) {
        const double Dm = D[m];
        const double Dp = (D[m + 1] - D[m - 1]) / (2.0 * h);
        const double Dpp = (D[m + 1] - 2.0 * D[m] + D[m - 1]) / h2;
        acc += Dm * km.A[m] + Dp * km.B[m] + 0.5 * Dpp * km.C[m];
      }
      // constant far field
      const double d_inf = 2.0 * vi - AL - AR;
      acc += d_inf * std::pow(km.tail_cut, -2.0 * s) / (2.0 * s);
      out.values[static_cast<std::size_t>(i)] = C * acc;
    }
  });

  // sup bound on what the constant replacement can hide, per node worst case
  const double xi_first = v.x(first), xi_last = v.x(last);
  const double zl = std::max(xi_first - v.x0, h);
  const double zr = std::max(v.x_end() - xi_last, h);
  max_tail = C * edge_dev *
             (std::pow(zl, -2.0 * s) + std::pow(zr, -2.0 * s)) / (2.0 * s);

  OperatorReport rep;
  rep.values = std::move(out);
  rep.method = Method::pv;
  rep.tail_estimate = max_tail;
  rep.first_valid = first;
  rep.last_valid = last;
  return rep;
}

OperatorReport fraclap_fourier(const GridFunction& v, const FracOrder& order) {
  if (order.n != 1) throw std::invalid_argument("fraclap_fourier: only n = 1");
  const std::size_t N = v.size();
  if (N < 4) throw std::invalid_argument("fraclap_fourier: need at least 4 points");

  std::size_t P = 1;
  while (P < N) P <<= 1;
  const bool padded = P != N;
  if (padded) P <<= 1; // room for the blend region

  std::vector<double> w(P);
  for (std::size_t i = 0; i < N; ++i) w[i] = v.values[i];
  if (padded) {
    const double vr = v.right_asymptote.value_or(v.values.back());
    const double vl = v.left_asymptote.value_or(v.values.front());
    const std::size_t pad = P - N;
    for (std::size_t k = 0; k < pad; ++k) {
      const double t = (static_cast<double>(k) + 0.5) / static_cast<double>(pad);
      w[N + k] = vr + (vl - vr) * 0.5 * (1.0 - std::cos(M_PI * t));
    }
  }

  std::vector<double> spec(2 * (P / 2 + 1));
  fftw_plan fwd = fftw_plan_dft_r2c_1d(static_cast<int>(P), w.data(),
                                       reinterpret_cast<fftw_complex*>(spec.data()),
                                       FFTW_ESTIMATE);
  fftw_execute(fwd);
  fftw_destroy_plan(fwd);

  const double L = v.h * static_cast<double>(P);
  for (std::size_t k = 0; k <= P / 2; ++k) {
    const double xi = 2.0 * M_PI * static_cast<double>(k) / L;
    const double mult = k == 0 ? 0.0 : std::pow(xi, 2.0 * order.s);
    spec[2 * k] *= mult / static_cast<double>(P);
    spec[2 * k + 1] *= mult / static_cast<double>(P);
  }

  fftw_plan bwd = fftw_plan_dft_c2r_1d(static_cast<int>(P),
                                       reinterpret_cast<fftw_complex*>(spec.data()),
                                       w.data(), FFTW_ESTIMATE);
  fftw_execute(bwd);
  fftw_destroy_plan(bwd);

  GridFunction out = v;
  out.left_asymptote.reset();
  out.right_asymptote.reset();
  out.decay = GridFunction::Decay::none;
  for (std::size_t i = 0; i < N; ++i) out.values[i] = w[i];

  OperatorReport rep;
  rep.values = std::move(out);
  rep.method = Method::fourier;
  rep.tail_estimate = 0.0;
  rep.first_valid = 0;
  rep.last_valid = N - 1;
  return rep;
}

GridFunction nonlocal_residual(const GridFunction& v, const Nonlinearity& nl,
                               const FracOrder& order, Method method) {
  OperatorReport rep = method == Method::pv ? fraclap_pv(v, order)
                                            : fraclap_fourier(v, order);
  GridFunction out = rep.values;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (rep.is_valid(i)) out.values[i] -= nl.f(v.values[i]);
  return out;
}

} // namespace frlap
