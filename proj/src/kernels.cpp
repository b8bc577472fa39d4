#include "frlap/kernels.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <stdexcept>

#include "frlap/gamma.hpp"

namespace frlap {

namespace {

void require_order(int n, double s) {
  if (n < 1) throw std::domain_error("ambient dimension must be >= 1");
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("s must lie in (0,1)");
}

double norm2(std::span<const double> x) {
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  return r2;
}

} // namespace

FracOrder FracOrder::make(double s, int n) {
  require_order(n, s);
  return FracOrder{s, 1.0 - 2.0 * s, n};
}

KernelConstants KernelConstants::make(const FracOrder& o) {
  return KernelConstants{pv_constant(o.n, o.s), extension_constant(o.s),
                         poisson_normalizer(o.n, o.s),
                         fundamental_constant(o.n, o.s)};
}

double pv_constant(int n, double s) {
  require_order(n, s);
  return std::pow(M_PI, -0.5 * n) * std::pow(2.0, 2.0 * s) *
         gamma_fn(0.5 * (n + 2.0 * s)) * s * (1.0 - s) / gamma_fn(2.0 - s);
}

double extension_constant(double s) {
  require_order(1, s);
  return std::pow(2.0, 2.0 * s - 1.0) * gamma_fn(s) / gamma_fn(1.0 - s);
}

double poisson_normalizer(int n, double s) {
  require_order(n, s);
  // 1/p_ns = int (1+|xi|^2)^{-(n+2s)/2} dxi = pi^{n/2} Gamma(s)/Gamma((n+2s)/2)
  return gamma_fn(0.5 * (n + 2.0 * s)) /
         (std::pow(M_PI, 0.5 * n) * gamma_fn(s));
}

double poisson_kernel(const FracOrder& o, std::span<const double> x, double y) {
  if (!(y > 0.0)) throw std::domain_error("poisson_kernel: y must be > 0");
  if (static_cast<int>(x.size()) != o.n)
    throw std::domain_error("poisson_kernel: point dimension mismatch");
  const double r2 = norm2(x);
  return poisson_normalizer(o.n, o.s) * std::pow(y, 2.0 * o.s) *
         std::pow(r2 + y * y, -0.5 * (o.n + 2.0 * o.s));
}

double poisson_kernel(const FracOrder& o, double x, double y) {
  const double xv[1] = {x};
  return poisson_kernel(o, std::span<const double>(xv, 1), y);
}

double fundamental_solution(const FracOrder& o, std::span<const double> x, double y) {
  if (y < 0.0) throw std::domain_error("fundamental_solution: y must be >= 0");
  if (static_cast<int>(x.size()) != o.n)
    throw std::domain_error("fundamental_solution: point dimension mismatch");
  const double rho2 = norm2(x) + y * y;
  if (rho2 == 0.0)
    throw std::domain_error("fundamental_solution: singular at the origin");
  return fundamental_constant(o.n, o.s) *
         std::pow(rho2, 0.5 * (2.0 * o.s - o.n));
}

double fundamental_solution(const FracOrder& o, double x, double y) {
  const double xv[1] = {x};
  return fundamental_solution(o, std::span<const double>(xv, 1), y);
}

double weighted_halfsphere_area(int n, double a) {
  if (!(a > -1.0 && a < 1.0)) throw std::domain_error("weight exponent outside (-1,1)");
  boost::math::quadrature::tanh_sinh<double> ts;
  if (n == 1) {
    // half-circle in R^2: int_0^pi sin^a(theta) dtheta
    return ts.integrate([a](double th) { return std::pow(std::sin(th), a); },
                        0.0, M_PI);
  }
  if (n == 2) {
    // upper unit sphere in R^3, polar angle phi measured from the plane
    return 2.0 * M_PI *
           ts.integrate([a](double ph) {
             return std::pow(std::sin(ph), a) * std::cos(ph);
           }, 0.0, 0.5 * M_PI);
  }
  throw std::domain_error("weighted_halfsphere_area: only n in {1,2}");
}

double fundamental_constant(int n, double s) {
  require_order(n, s);
  if (std::abs(n - 2.0 * s) < 1e-12)
    throw std::domain_error("fundamental_constant: n = 2s is logarithmic");
  return 1.0 / ((n - 2.0 * s) * weighted_halfsphere_area(n, 1.0 - 2.0 * s));
}

double fundamental_flux(const FracOrder& o, double r) {
  if (!(r > 0.0)) throw std::domain_error("fundamental_flux: r must be > 0");
  // Gamma_s is radial; probe its radial derivative by central difference so
  // the flux stays independent of the power-law algebra it is testing.
  const double h = 1e-5 * r;
  const double e = fundamental_constant(o.n, o.s);
  const double expo = 2.0 * o.s - o.n;
  const double dG =
      (e * std::pow(r + h, expo) - e * std::pow(r - h, expo)) / (2.0 * h);
  boost::math::quadrature::tanh_sinh<double> ts;
  const double a = o.a;
  if (o.n == 1) {
    return ts.integrate([&](double th) {
      return std::pow(r * std::sin(th), a) * dG * r;
    }, 0.0, M_PI);
  }
  if (o.n == 2) {
    return 2.0 * M_PI * ts.integrate([&](double ph) {
      return std::pow(r * std::sin(ph), a) * dG * r * r * std::cos(ph);
    }, 0.0, 0.5 * M_PI);
  }
  throw std::domain_error("fundamental_flux: only n in {1,2}");
}

} // namespace frlap
