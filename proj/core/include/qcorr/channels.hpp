#pragma once

// Local Kraus channels on two-qubit states and the phase-damping family.

#include <span>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/qmat.hpp"

namespace qcorr {

/// Single-qubit channel. Construction checks sum_i K_i^dagger K_i = I within 1e-12.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Mat2> operators);

  const std::vector<Mat2>& operators() const noexcept { return operators_; }

  /// max entry of |sum_i K_i^dagger K_i - I|
  double completeness_residual() const;

 private:
  std::vector<Mat2> operators_;
};

/// K_1 = |0><0| + sqrt(1 - gamma)|1><1|, K_2 = sqrt(gamma)|1><1|.
KrausChannel phase_damping_kraus(double gamma);

enum class ChannelTarget { both, a_only, b_only };

/// sum_{i,j} (K_i x K_j) rho (K_i x K_j)^dagger for `both`; the one-sided
/// variants act with the identity on the other qubit.
TwoQubit apply_channel(const TwoQubit& rho, const KrausChannel& channel, ChannelTarget target = ChannelTarget::both);

inline TwoQubit apply_channel_both(const TwoQubit& rho, const KrausChannel& channel) {
  return apply_channel(rho, channel, ChannelTarget::both);
}

/// X state with a = 0.
struct OmegaParams {
  double b = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  double cz = 0.0;

  XParams to_x_params() const { return {0.0, b, cx, cy, cz}; }
};

/// Closed-form image of Omega under phase damping on both qubits: cx and cy
/// scale by the product of the two single-qubit coherence factors, b and cz
/// are untouched. Throws InvalidStateError if Omega itself is not a state.
XParams evolve_omega(const OmegaParams& omega, double gamma);

/// One report per gamma, each computed on the Kraus-evolved state.
std::vector<CorrelationReport> sweep_gamma(const OmegaParams& omega, std::span<const double> gammas);

}  // namespace qcorr
