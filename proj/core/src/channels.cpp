#include "qcorr/channels.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace qcorr {
namespace {
constexpr double kCompletenessTol = 1e-12;
}

KrausChannel::KrausChannel(std::vector<Mat2> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw ChannelError("Kraus channel needs at least one operator");
  const double residual = completeness_residual();
  if (!(residual <= kCompletenessTol)) {
    std::ostringstream os;
    os << "Kraus operators are not complete (residual " << residual << ")";
    throw ChannelError(os.str());
  }
}

double KrausChannel::completeness_residual() const {
  Mat2 sum;
  for (const Mat2& k : operators_) sum += k.adjoint() * k;
  return max_abs_diff(sum, Mat2::identity());
}

KrausChannel phase_damping_kraus(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InputError("decoherence rate gamma = " + std::to_string(gamma) + " outside [0, 1]");
  }
  return KrausChannel({Mat2::diagonal({1.0, std::sqrt(1.0 - gamma)}), Mat2::diagonal({0.0, std::sqrt(gamma)})});
}

TwoQubit apply_channel(const TwoQubit& rho, const KrausChannel& channel, ChannelTarget target) {
  const std::vector<Mat2> identity_only = {Mat2::identity()};
  const auto& on_a = target == ChannelTarget::b_only ? identity_only : channel.operators();
  const auto& on_b = target == ChannelTarget::a_only ? identity_only : channel.operators();
  Mat4 out;
  for (const Mat2& ka : on_a) {
    for (const Mat2& kb : on_b) {
      const Mat4 k = kron(ka, kb);
      out += k * rho.matrix() * k.adjoint();
    }
  }
  // Rounding in the products is below the validation tolerances; symmetrize
  // so the Hermiticity check sees exact conjugate pairs.
  out = 0.5 * (out + out.adjoint());
  return TwoQubit::validated(out);
}

XParams evolve_omega(const OmegaParams& omega, double gamma) {
  const XParams start = omega.to_x_params();
  x_state_from_params(start);  // validates Omega

  // Each qubit multiplies its |0><1| coherence by sum_i K_i(0,0) conj(K_i(1,1)).
  const KrausChannel channel = phase_damping_kraus(gamma);
  Complex per_qubit = 0.0;
  for (const Mat2& k : channel.operators()) per_qubit += k(0, 0) * std::conj(k(1, 1));
  const double factor = (per_qubit * per_qubit).real();

  XParams out = start;
  out.cx *= factor;
  out.cy *= factor;
  return out;
}

std::vector<CorrelationReport> sweep_gamma(const OmegaParams& omega, std::span<const double> gammas) {
  const TwoQubit initial = x_state_from_params(omega.to_x_params());
  std::vector<CorrelationReport> reports;
  reports.reserve(gammas.size());
  for (double gamma : gammas) {
    const TwoQubit evolved = apply_channel_both(initial, phase_damping_kraus(gamma));
    reports.push_back(analyze(XState::from_params(params_from_density(evolved))));
  }
  return reports;
}

}  // namespace qcorr
