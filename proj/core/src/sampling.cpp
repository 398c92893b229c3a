#include "qcorr/sampling.hpp"

namespace qcorr {

XState sample_x_state(std::mt19937_64& rng, StateFamily family) {
  std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
  for (;;) {
    XParams p;
    p.a = coefficient(rng);
    p.b = coefficient(rng);
    p.cx = coefficient(rng);
    p.cy = coefficient(rng);
    p.cz = coefficient(rng);
    if (family != StateFamily::general) p.a = 0.0;
    if (family == StateFamily::bell_diagonal) p.b = 0.0;
    if (x_state_spectrum(p)[3] < 0.0) continue;
    try {
      return XState::from_params(p);
    } catch (const InvalidStateError&) {
      // closed-form spectrum at the boundary disagreed with the full check
    }
  }
}

}  // namespace qcorr
