#include "qcorr/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcorr {

double concurrence_two_qubit(const TwoQubit& rho) {
  const Mat4 yy = kron(pauli::y(), pauli::y());
  const Mat4 flipped = yy * rho.matrix().conjugate() * yy;

  const Eigensystem<4> es = hermitian_eigensystem(rho.matrix());
  std::array<double, 4> roots{};
  for (std::size_t i = 0; i < 4; ++i) roots[i] = std::sqrt(std::max(es.values[i], 0.0));
  Mat4 sqrt_rho;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t k = 0; k < 4; ++k)
        sqrt_rho(r, c) += es.vectors(r, k) * roots[k] * std::conj(es.vectors(c, k));

  Mat4 m = sqrt_rho * flipped * sqrt_rho;
  m = 0.5 * (m + m.adjoint());
  const auto mu = hermitian_eigenvalues(m);
  double c = std::sqrt(std::max(mu[0], 0.0));
  for (std::size_t i = 1; i < 4; ++i) c -= std::sqrt(std::max(mu[i], 0.0));
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_x_state(const XParams& p) {
  const double r11 = (1.0 + p.a + p.b + p.cz) / 4.0;
  const double r22 = (1.0 + p.a - p.b - p.cz) / 4.0;
  const double r33 = (1.0 - p.a + p.b - p.cz) / 4.0;
  const double r44 = (1.0 - p.a - p.b + p.cz) / 4.0;
  const double r14 = std::abs(p.cx - p.cy) / 4.0;
  const double r23 = std::abs(p.cx + p.cy) / 4.0;
  const double inner = r23 - std::sqrt(std::max(r11 * r44, 0.0));
  const double outer = r14 - std::sqrt(std::max(r22 * r33, 0.0));
  return std::clamp(2.0 * std::max({0.0, inner, outer}), 0.0, 1.0);
}

double eof_from_concurrence(double concurrence) {
  if (!(concurrence >= -1e-12 && concurrence <= 1.0 + 1e-12)) {
    throw InputError("concurrence " + std::to_string(concurrence) + " outside [0, 1]");
  }
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

double eof_bc_koashi_winter(const XState& state) {
  return minimize_over_basis([&](const MeasurementBasis& b) { return avg_conditional_entropy(state, b); }).value;
}

std::optional<double> corollary2_deficit(const XState& state, TheoremBranch branch, double eof_bc) {
  switch (branch) {
    case TheoremBranch::a_zero:
    case TheoremBranch::theta_half_pi:
      return eof_bc - state.entropy_ab() + 1.0;
    case TheoremBranch::theta_zero:
      return eof_bc - state.entropy_ab() + binary_entropy((1.0 - state.params().a) / 2.0);
    case TheoremBranch::none:
      break;
  }
  return std::nullopt;
}

std::optional<double> corollary2_deficit(const XState& state, TheoremBranch branch) {
  if (branch == TheoremBranch::none) return std::nullopt;
  return corollary2_deficit(state, branch, eof_bc_koashi_winter(state));
}

EntanglementReport entanglement_report(const XState& state) {
  EntanglementReport r;
  r.concurrence = concurrence_two_qubit(state.density());
  r.eof = eof_from_concurrence(r.concurrence);
  r.eof_bc = eof_bc_koashi_winter(state);
  return r;
}

}  // namespace qcorr
