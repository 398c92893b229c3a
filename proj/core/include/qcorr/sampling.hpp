#pragma once

// Seeded random X states: uniform on the coefficient box [-1, 1]^5 (or a
// face of it), rejected until the matrix is positive semidefinite.

#include <random>

#include "qcorr/qmat.hpp"

namespace qcorr {

enum class StateFamily {
  general,        // all five coefficients free
  a_zero,         // a = 0
  bell_diagonal,  // a = b = 0
};

XState sample_x_state(std::mt19937_64& rng, StateFamily family = StateFamily::general);

}  // namespace qcorr
