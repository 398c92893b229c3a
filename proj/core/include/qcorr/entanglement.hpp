#pragma once

// Entanglement of formation: Wootters concurrence for the two-qubit state
// itself, and the Koashi-Winter route for the purifying partner of B.

#include <optional>

#include "qcorr/correlations.hpp"
#include "qcorr/qmat.hpp"

namespace qcorr {

struct EntanglementReport {
  double concurrence = 0.0;
  double eof = 0.0;     // of rho_AB, from the concurrence
  double eof_bc = 0.0;  // of rho_BC, C purifying AB
};

/// Wootters concurrence max(0, sqrt(mu_1) - sqrt(mu_2) - sqrt(mu_3) - sqrt(mu_4)),
/// mu the descending spectrum of rho (Y x Y) rho* (Y x Y), obtained as the
/// Hermitian sqrt(rho) rho~ sqrt(rho).
double concurrence_two_qubit(const TwoQubit& rho);

/// X-state closed form 2 max(0, |rho_23| - sqrt(rho_11 rho_44), |rho_14| - sqrt(rho_22 rho_33)).
double concurrence_x_state(const XParams& p);

/// h((1 + sqrt(1 - C^2)) / 2). Throws InputError for C outside [0, 1].
double eof_from_concurrence(double concurrence);

/// E_f(rho_BC) as min over bases of sum_k p_k S(rho_B|k). No purification is built.
double eof_bc_koashi_winter(const XState& state);

/// Deficit reassembled from E_f(rho_BC): E_f - S(rho_AB) + 1 on the a = 0 and
/// theta* = pi/2 branches, E_f - S(rho_AB) + h((1 - a)/2) on theta* = 0.
/// Empty for TheoremBranch::none.
std::optional<double> corollary2_deficit(const XState& state, TheoremBranch branch);
std::optional<double> corollary2_deficit(const XState& state, TheoremBranch branch, double eof_bc);

EntanglementReport entanglement_report(const XState& state);

}  // namespace qcorr
