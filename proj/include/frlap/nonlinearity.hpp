#pragma once

#include <functional>
#include <string>

namespace frlap {

// Reaction term f with derivative and potential G, G' = -f. g_ref records the
// reference level G(1) used by the Hamiltonian checks.
struct Nonlinearity {
  std::function<double(double)> f;
  std::function<double(double)> fprime;
  std::function<double(double)> G;
  double g_ref = 0.0;
  std::string name;

  // Same reaction divided by c (and potential with it); used to switch the
  // boundary condition between the (1+a) d_nu u = f(u) convention and the
  // exact nonlocal equation, which differ by d_s / (2(1-s)).
  Nonlinearity scaled(double c) const;
};

enum class BistableTag { cubic, sine_pi };

Nonlinearity make_bistable(BistableTag tag);

// Custom nonlinearity; rejects callbacks whose G fails G' = -f (finite
// differences on [-1.5, 1.5]) or whose fprime disagrees with f.
Nonlinearity make_custom(std::string name,
                         std::function<double(double)> f,
                         std::function<double(double)> fprime,
                         std::function<double(double)> G,
                         double g_ref = 0.0,
                         double check_tol = 1e-6);

struct NecessaryReport {
  bool nec1_pass = false; // f(1) = f(-1) = 0
  bool nec2_pass = false; // G > G(1) = G(-1) in (-1,1)
  double integral_f = 0.0;
  double f_plus = 0.0, f_minus = 0.0;
  double g_level_diff = 0.0; // |G(1) - G(-1)|
  double min_interior_gap = 0.0;
};

NecessaryReport check_necessary_conditions(const Nonlinearity& nl, int samples);

} // namespace frlap
