#pragma once

// Projective measurements on qubit A of an X state.
//
// Basis vectors, with theta in [0, pi] and phi in [0, 2 pi):
//   |0'> = cos(theta/2)|0> - e^{-i phi} sin(theta/2)|1>
//   |1'> = e^{i phi} sin(theta/2)|0> + cos(theta/2)|1>
//
// The closed forms below take an XState; the *_matrix functions build the
// same objects explicitly and serve as the cross-check path.

#include <array>
#include <utility>

#include "qcorr/qmat.hpp"

namespace qcorr {

struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;
};

/// {|0'><0'|, |1'><1'|}.
std::pair<Mat2, Mat2> basis_projectors(const MeasurementBasis& basis);

/// p_k = (1 +/- a cos theta) / 2. Independent of phi.
std::array<double, 2> outcome_probabilities(const XParams& p, double theta);

struct ConditionalSpectrum {
  std::array<double, 2> p;                 // outcome probabilities
  std::array<std::array<double, 2>, 2> w;  // w[k][j]: eigenvalues of the B state after outcome k
};

/// Closed-form outcome probabilities and conditional eigenvalues
///   w_kj = 1/2 + (-1)^j sqrt(R + T_k) / (4 p_k),
///   R = (cx^2 cos^2 phi + cy^2 sin^2 phi) sin^2 theta,
///   T_k = (b + (-1)^k cz cos theta)^2.
/// Throws DegenerateOutcomeError if some p_k <= 1e-14.
ConditionalSpectrum conditional_spectrum(const XState& state, const MeasurementBasis& basis);

/// sum_k p_k S(rho^B_k) in bits, from the conditional spectrum. An outcome
/// with vanishing probability contributes zero.
double avg_conditional_entropy(const XState& state, const MeasurementBasis& basis);

/// S(sum_k M_k rho M_k) from the four post-measurement eigenvalues
/// lambda = (2 p_k +/- sqrt(R + T_k)) / 4.
double post_measurement_entropy(const XState& state, const MeasurementBasis& basis);

/// Bracket H_theta of dG/dtheta = -(sin theta / 4) H_theta.
/// Throws SingularPointError where sqrt(R + T_k) or 2 p_k - sqrt(R + T_k)
/// falls to 1e-12 (a conditional state is pure or maximally mixed).
double stationarity_h_theta(const XState& state, const MeasurementBasis& basis);

/// H_phi = sum_k log2[(2 p_k + s_k) / (2 p_k - s_k)] / s_k with s_k = sqrt(R + T_k).
/// Strictly positive wherever defined. Same singular set as above.
double stationarity_h_phi(const XState& state, const MeasurementBasis& basis);

/// dG/dtheta, G = post_measurement_entropy. Requires theta in (0, pi/2].
double dG_dtheta(const XState& state, const MeasurementBasis& basis);

/// dG/dphi = 2 e f sin^2(theta) sin(2 phi) H_phi with e f = (cx + cy)(cx - cy) / 16.
/// On canonical parameters (|cx| >= |cy|) this is e = |cx + cy| / 4, f = |cx - cy| / 4.
double dG_dphi(const XState& state, const MeasurementBasis& basis);

/// Local-unitary representative with |cx| >= |cy| and cx >= 0.
///
/// Rz(pi/2) on both qubits swaps cx and cy; Rz(pi) on A flips both signs.
/// a, b, cz, and every correlation measure are unchanged.
XParams canonicalize(const XParams& p);

/// Parameters of the state with the qubits exchanged (a <-> b). Measuring B
/// on `p` is measuring A on the swapped state.
XParams swap_subsystems(const XParams& p);

/// Explicit conditional state Tr_A[(M_k x I) rho (M_k x I)] (unnormalized; its
/// trace is p_k).
Mat2 conditional_state_matrix(const TwoQubit& rho, const MeasurementBasis& basis, int outcome);

/// Explicit sum_k (M_k x I) rho (M_k x I).
Mat4 measured_state_matrix(const TwoQubit& rho, const MeasurementBasis& basis);

}  // namespace qcorr
