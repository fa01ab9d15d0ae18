#pragma once

#include "entmono/states.hpp"

#include <cstdint>

namespace entmono {

// Product ansatz |phi_A> (x) |phi_B> with
// |phi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, normalized by
// construction.
struct ProductAnsatz {
  double theta_a = 0.0;
  double phi_a = 0.0;
  double theta_b = 0.0;
  double phi_b = 0.0;
};

struct VariationalOptions {
  int grid_per_axis = 16;    // coarse seeding grid per Bloch angle
  int n_starts = 32;         // best grid cells refined by Nelder-Mead
  double tol = 1e-10;        // simplex value-spread stopping tolerance
  int max_iterations = 500;  // per Nelder-Mead run
  std::uint64_t seed = 0;    // jitters start points; result stable to < 1e-8
};

// max over product states of |<phi_A phi_B | psi>| for a two-qubit pure psi.
double max_product_overlap(const StateVector& psi, const VariationalOptions& opts = {});

// min over product states of 1 - |<phi_A phi_B | psi>|^2 (>= 0).
double min_geometric_pure(const StateVector& psi, const VariationalOptions& opts = {});

// min over product states of 2 - 2 |<phi_A phi_B | psi>| (>= 0).
double min_bures_pure(const StateVector& psi, const VariationalOptions& opts = {});

}  // namespace entmono
