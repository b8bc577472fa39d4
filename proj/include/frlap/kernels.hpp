#pragma once

#include <span>

namespace frlap {

// Fraction s in (0,1) together with the weight exponent a = 1 - 2s and the
// ambient dimension n of the trace space.
struct FracOrder {
  double s;
  double a;
  int n;

  static FracOrder make(double s, int n = 1);
};

// Closed-form constants of the extension theory for one (n, s) pair.
//
//   c_ns : normalizer of the principal-value kernel |z|^{-n-2s}
//   d_s  : Dirichlet-to-Neumann constant, d_s = 2^{2s-1} Gamma(s)/Gamma(1-s)
//   p_ns : Poisson kernel normalizer, unit mass on horizontal slices
//   e_ns : fundamental-solution constant, calibrated from the unit Neumann
//          flux through weighted half-spheres (no closed form is used)
struct KernelConstants {
  double c_ns;
  double d_s;
  double p_ns;
  double e_ns;

  static KernelConstants make(const FracOrder& order);
};

double pv_constant(int n, double s);
double extension_constant(double s);
double poisson_normalizer(int n, double s);

// P_s(x,y) = p_ns y^{2s} / (|x|^2 + y^2)^{(n+2s)/2}, y > 0.
double poisson_kernel(const FracOrder& order, std::span<const double> x, double y);
double poisson_kernel(const FracOrder& order, double x, double y); // n = 1

// Gamma_s(x,y) = e_ns |(x,y)|^{2s-n}; singular at the origin.
double fundamental_solution(const FracOrder& order, std::span<const double> x, double y);
double fundamental_solution(const FracOrder& order, double x, double y); // n = 1

// e_{n,s} such that the weighted flux -y^a d_y Gamma_s through {y=0} carries
// unit mass; equivalently flux through every half-sphere is -1. n = 2s is a
// logarithmic degeneracy and is rejected.
double fundamental_constant(int n, double s);

// int_{S^n_+} y^a dS over the unit upper half-sphere in R^{n+1} (quadrature).
double weighted_halfsphere_area(int n, double a);

// Weighted flux of fundamental_solution through the half-sphere of radius r
// (quadrature; equals -1 for the calibrated constant, independent of r).
double fundamental_flux(const FracOrder& order, double r);

} // namespace frlap
