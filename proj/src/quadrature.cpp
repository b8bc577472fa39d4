#include "frlap/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace frlap {

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(f, lo, hi, 12, rel_tol);
}

double poisson_mass_tail_1d(double s, double p_ns, double y, double cut) {
  // int_cut^inf y^{2s} (x^2+y^2)^{-(1+2s)/2} dx  via  x = y/u, w = u^{2s}:
  //   = 1/(2s) int_0^{(y/cut)^{2s}} (1 + w^{1/s})^{-(1+2s)/2} dw
  const double w_hi = std::pow(y / cut, 2.0 * s);
  const double q = (1.0 + 2.0 * s) / 2.0;
  auto g = [&](double w) { return std::pow(1.0 + std::pow(w, 1.0 / s), -q); };
  return p_ns / (2.0 * s) * integrate(g, 0.0, w_hi, 1e-14);
}

} // namespace frlap
