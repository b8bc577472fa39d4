#pragma once

#include <cstdint>

#include "frlap/extension.hpp"

namespace frlap {

struct MaxPrincipleReport {
  double min_interior = 0.0;
  bool pass = false; // min_interior >= -1e-12
};

// Weak maximum principle probe for a Dirichlet-solved field with nonnegative
// boundary data.
MaxPrincipleReport check_max_principle(const HalfStripField& u);

struct HarnackOptions {
  double half_width = 4.0; // solve on [-4,4] x [0,4], measure on the unit half-ball
  int nx = 128, ny = 96;
  double d_bound = 1.0;    // sup bound of the Robin coefficient
};

// Max over trials of sup/inf on B_1^+ for random positive solutions of
// L_a u = 0 with d(nu^a) u + d(x) u = 0 on the trace. Trials whose minimum
// touches zero are resampled.
double estimate_harnack(const FracOrder& order, int trials, std::uint64_t seed,
                        const HarnackOptions& opts = {});

// Weighted conormal flux -y^a u_y at the bottom node i0 (boundary fit).
// Preconditions of the Hopf lemma are verified: u >= 0, u(i0, 0) = 0, u > 0
// at interior nodes.
double check_hopf(const HalfStripField& u, int i0);

} // namespace frlap
