#pragma once

namespace frlap {

// Gamma function on the real line (poles at 0, -1, -2, ... excluded).
// Lanczos approximation, relative error below 1e-13 on (0, 20); negative
// arguments go through the reflection formula.
double gamma_fn(double x);

// log |Gamma(x)| for x > 0, same accuracy class.
double log_gamma(double x);

} // namespace frlap
