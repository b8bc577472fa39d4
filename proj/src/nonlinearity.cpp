#include "frlap/nonlinearity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "frlap/quadrature.hpp"

namespace frlap {

Nonlinearity Nonlinearity::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("Nonlinearity::scaled: factor must be > 0");
  Nonlinearity out;
  auto ff = f, fp = fprime, GG = G;
  out.f = [ff, c](double v) { return ff(v) / c; };
  out.fprime = [fp, c](double v) { return fp(v) / c; };
  out.G = [GG, c](double v) { return GG(v) / c; };
  out.g_ref = g_ref / c;
  out.name = name;
  return out;
}

Nonlinearity make_bistable(BistableTag tag) {
  Nonlinearity nl;
  switch (tag) {
    case BistableTag::cubic:
      nl.f = [](double v) { return v - v * v * v; };
      nl.fprime = [](double v) { return 1.0 - 3.0 * v * v; };
      nl.G = [](double v) { const double w = 1.0 - v * v; return 0.25 * w * w; };
      nl.g_ref = 0.0;
      nl.name = "cubic";
      break;
    case BistableTag::sine_pi:
      nl.f = [](double v) { return std::sin(M_PI * v) / M_PI; };
      nl.fprime = [](double v) { return std::cos(M_PI * v); };
      nl.G = [](double v) { return (1.0 + std::cos(M_PI * v)) / (M_PI * M_PI); };
      nl.g_ref = 0.0;
      nl.name = "sine_pi";
      break;
  }
  return nl;
}

Nonlinearity make_custom(std::string name, std::function<double(double)> f,
                         std::function<double(double)> fprime,
                         std::function<double(double)> G, double g_ref,
                         double check_tol) {
  const int npts = 301;
  const double lo = -1.5, hi = 1.5;
  const double dh = 1e-5;
  double scale_f = 1e-12, scale_fp = 1e-12;
  for (int i = 0; i < npts; ++i) {
    const double v = lo + (hi - lo) * i / (npts - 1);
    scale_f = std::max(scale_f, std::abs(f(v)));
    scale_fp = std::max(scale_fp, std::abs(fprime(v)));
  }
  for (int i = 0; i < npts; ++i) {
    const double v = lo + (hi - lo) * i / (npts - 1);
    const double dG = (G(v + dh) - G(v - dh)) / (2.0 * dh);
    if (std::abs(dG + f(v)) > check_tol * std::max(1.0, scale_f))
      throw std::invalid_argument("make_custom: G' != -f near v = " + std::to_string(v));
    const double df = (f(v + dh) - f(v - dh)) / (2.0 * dh);
    if (std::abs(df - fprime(v)) > check_tol * std::max(1.0, scale_fp))
      throw std::invalid_argument("make_custom: fprime disagrees with f near v = " + std::to_string(v));
  }
  Nonlinearity nl;
  nl.f = std::move(f);
  nl.fprime = std::move(fprime);
  nl.G = std::move(G);
  nl.g_ref = g_ref;
  nl.name = std::move(name);
  return nl;
}

NecessaryReport check_necessary_conditions(const Nonlinearity& nl, int samples) {
  if (samples < 100) throw std::invalid_argument("check_necessary_conditions: samples >= 100");
  NecessaryReport r;
  r.f_plus = nl.f(1.0);
  r.f_minus = nl.f(-1.0);
  r.nec1_pass = std::abs(r.f_plus) <= 1e-10 && std::abs(r.f_minus) <= 1e-10;

  const double g1 = nl.G(1.0);
  r.g_level_diff = std::abs(g1 - nl.G(-1.0));
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i < samples; ++i) {
    const double v = -1.0 + 2.0 * i / samples;
    min_gap = std::min(min_gap, nl.G(v) - g1);
  }
  r.min_interior_gap = min_gap;
  r.nec2_pass = min_gap > 0.0 && r.g_level_diff <= 1e-10;

  r.integral_f = integrate([&](double v) { return nl.f(v); }, -1.0, 1.0, 1e-12);
  return r;
}

} // namespace frlap
