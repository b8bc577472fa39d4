#pragma once

#include <functional>

namespace frlap {

// Adaptive Gauss-Kronrod on a finite interval.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-12);

// Mass of the Poisson kernel slice beyond |x| > cut for n = 1, evaluated
// exactly via the substitution u = y/x (smooth transformed integrand).
double poisson_mass_tail_1d(double s, double p_ns, double y, double cut);

} // namespace frlap
