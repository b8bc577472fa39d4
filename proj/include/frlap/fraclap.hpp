#pragma once

#include "frlap/grid_function.hpp"
#include "frlap/kernels.hpp"
#include "frlap/nonlinearity.hpp"

namespace frlap {

enum class Method { pv, fourier };

struct OperatorReport {
  GridFunction values;  // NaN outside [first_valid, last_valid]
  Method method = Method::pv;
  double tail_estimate = 0.0;
  std::size_t first_valid = 0;
  std::size_t last_valid = 0;

  bool is_valid(std::size_t i) const { return i >= first_valid && i <= last_valid; }
};

// Principal-value evaluation of (-Delta)^s v on the grid, n = 1.
//
// The symmetric second difference D(z) = 2 v(x) - v(x+z) - v(x-z) is even and
// O(z^2), so the singular zone [0, 2.5 h] integrates a two-term even fit
// c2 z^2 + c4 z^4 against exact power-law moments; each remaining grid cell
// integrates the local parabola through three D samples against exact moments
// of |z|^{-1-2s}; past the window, v is replaced by its declared asymptotes
// and the remainder integrates in closed form.
OperatorReport fraclap_pv(const GridFunction& v, const FracOrder& order,
                          int threads = 1);

// Discrete-transform route: multiply by |xi|^{2s} on the periodic window.
// Non power-of-two inputs are padded to the next power of two with a cosine
// blend between the declared (or boundary) values.
OperatorReport fraclap_fourier(const GridFunction& v, const FracOrder& order);

// (-Delta)^s v - f(v) on the valid nodes of the chosen method.
GridFunction nonlocal_residual(const GridFunction& v, const Nonlinearity& nl,
                               const FracOrder& order, Method method);

} // namespace frlap
