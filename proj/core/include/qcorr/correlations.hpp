#pragma once

// Quantum discord, one-way quantum deficit and the relations between them
// for two-qubit X states, with measurements on qubit A.
//
//   F(theta, phi) = S(rho_A) + sum_k p_k S(rho_B|k) - S(rho_AB)   (discord objective)
//   G(theta, phi) = S(sum_k M_k rho M_k) - S(rho_AB)               (deficit objective)
//
// Their difference G - F = h(p_0) - S(rho_A) depends on theta only.

#include <functional>
#include <optional>
#include <string_view>

#include "qcorr/measure.hpp"
#include "qcorr/qmat.hpp"

namespace qcorr {

enum class Objective { F, G };

enum class OptimizerMethod { grid, golden_refined, derivative_root };

std::string_view to_string(OptimizerMethod m);

struct Optimum {
  double value = 0.0;
  double theta_star = 0.0;
  double phi_star = 0.0;
  OptimizerMethod method = OptimizerMethod::grid;
  int evaluations = 0;
};

enum class TheoremBranch { a_zero, theta_zero, theta_half_pi, none };

std::string_view to_string(TheoremBranch b);

struct CorrelationReport {
  Optimum discord;
  Optimum deficit;
  double classical_correlation = 0.0;
  double mutual_information = 0.0;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double entropy_ab = 0.0;
  TheoremBranch theorem_branch = TheoremBranch::none;
  double relation_residual = 0.0;  // NaN when the branch is `none`
};

double objective_F(const XState& state, const MeasurementBasis& basis);
double objective_G(const XState& state, const MeasurementBasis& basis);
double objective(const XState& state, Objective which, const MeasurementBasis& basis);

/// G - F at angle theta: h(p_0) - S(rho_A), always in [0, 1].
double gap(const XState& state, double theta);

/// d(G - F)/dtheta = (a/2) sin(theta) log2[(1 + a cos theta) / (1 - a cos theta)].
/// Throws SingularPointError when |a cos theta| = 1.
double gap_derivative(double a, double theta);

/// Global minimum over projective bases.
///
/// The objective is scanned on 1001 theta points over [0, pi/2] for each
/// phi in {0, pi/2}; every grid local minimum among the best few is then
/// golden-section refined to a theta bracket of 1e-10. A landscape that is
/// flat within 1e-12 reports theta = 0, and near-ties prefer the smaller
/// theta (then phi = 0).
Optimum minimize_objective(const XState& state, Objective which);

/// Same search over an arbitrary basis function (used for the conditional
/// entropy minimization behind the Koashi-Winter route).
Optimum minimize_over_basis(const std::function<double(const MeasurementBasis&)>& f);

Optimum quantum_discord(const XState& state);
Optimum one_way_deficit(const XState& state);

double mutual_information(const XState& state);

/// S(rho_B) - min sum_k p_k S(rho_B|k), the minimum taken at the discord argmin.
double classical_correlation(const XState& state, const Optimum& discord);
double classical_correlation(const XState& state);

struct TheoremCheck {
  TheoremBranch branch;
  double residual;  // NaN for TheoremBranch::none
};

inline constexpr double kBranchAZeroTol = 1e-12;
inline constexpr double kBranchThetaTol = 1e-6;

/// Which shared-basis case applies and how well the matching relation holds:
/// a = 0 or both argmins at 0 give |deficit - discord|; both argmins at
/// pi/2 give |deficit - discord + S(rho_A) - 1|.
TheoremCheck theorem_classify(const XState& state, const Optimum& discord, const Optimum& deficit);

/// Bisection root in q of d(H_theta)/dtheta at theta = pi/2, phi = 0 for a
/// one-parameter family (default: q |psi-><psi-| + (1 - q)|00><00|).
/// The derivative is a central difference of H_theta with step 1e-6.
double basis_switch_root(const std::function<XParams(double)>& family, double q_lo, double q_hi,
                         double tol = 1e-10);
double basis_switch_root(double q_lo = 0.5, double q_hi = 0.9, double tol = 1e-10);

/// |discord + C_RE - deficit| with C_RE = h(p_0(theta*)) - S(rho_A), the
/// relative entropy of coherence of rho_A in the optimal measurement basis.
/// Empty when the state has no shared optimal basis.
std::optional<double> coherence_tradeoff_check(const XState& state, const Optimum& discord,
                                               const Optimum& deficit);

/// Brute-force reference minimum.
///
/// Exhaustive scan of theta in [0, pi] (n_theta points, endpoints included)
/// by phi in [0, 2 pi) (n_phi points) with no phi reduction and no
/// canonicalization; every value comes from explicit projectors, explicit
/// post-measurement matrices and numerical eigenvalues. The best grid cells
/// are then polished by Nelder-Mead on the same matrix pipeline.
/// Requires n_theta, n_phi >= 101.
Optimum grid_oracle(const XState& state, Objective which, int n_theta, int n_phi);

/// Matrix-pipeline objective value at one basis (the oracle's integrand).
double objective_from_matrices(const XState& state, Objective which, const MeasurementBasis& basis);

CorrelationReport analyze(const XState& state);

}  // namespace qcorr
