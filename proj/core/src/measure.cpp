#include "qcorr/measure.hpp"

#include <cmath>
#include <sstream>

namespace qcorr {
namespace {

constexpr double kDegenerateOutcome = 1e-14;
constexpr double kSingularGap = 1e-12;

// Per-basis intermediates. pk2[k] = 2 p_k = 1 +/- a cos theta (the
// unnormalized outcome weight), t[k] = b +/- cz cos theta (signed root of T_k),
// s[k] = sqrt(R + T_k).
struct BasisTerms {
  double cos_t;
  double sin_t;
  double c_phi;  // cx^2 cos^2 phi + cy^2 sin^2 phi, so R = c_phi sin^2 theta
  double r;
  std::array<double, 2> pk2;
  std::array<double, 2> t;
  std::array<double, 2> s;
};

BasisTerms basis_terms(const XParams& p, const MeasurementBasis& basis) {
  BasisTerms bt{};
  bt.cos_t = std::cos(basis.theta);
  bt.sin_t = std::sin(basis.theta);
  const double cp = std::cos(basis.phi);
  const double sp = std::sin(basis.phi);
  bt.c_phi = p.cx * p.cx * cp * cp + p.cy * p.cy * sp * sp;
  bt.r = bt.c_phi * bt.sin_t * bt.sin_t;
  for (int k = 0; k < 2; ++k) {
    const double sign = k == 0 ? 1.0 : -1.0;
    bt.pk2[k] = 1.0 + sign * p.a * bt.cos_t;
    bt.t[k] = p.b + sign * p.cz * bt.cos_t;
    bt.s[k] = std::sqrt(bt.r + bt.t[k] * bt.t[k]);
  }
  return bt;
}

void require_regular(const BasisTerms& bt, const MeasurementBasis& basis) {
  for (int k = 0; k < 2; ++k) {
    if (bt.s[k] <= kSingularGap || bt.pk2[k] - bt.s[k] <= kSingularGap) {
      std::ostringstream os;
      os << "derivative singular at theta=" << basis.theta << ", phi=" << basis.phi << " (outcome " << k
         << (bt.s[k] <= kSingularGap ? " conditional state maximally mixed" : " conditional state pure") << ")";
      throw SingularPointError(os.str());
    }
  }
}

double log_ratio(double pk2, double s) { return std::log2((pk2 + s) / (pk2 - s)); }

double clip_unit(double x) {
  if (x < 0.0 && x >= -kPositivityTol) return 0.0;
  if (x > 1.0 && x <= 1.0 + kPositivityTol) return 1.0;
  return x;
}

Mat4 lift_a(const Mat2& m) { return kron(m, Mat2::identity()); }

}  // namespace

std::pair<Mat2, Mat2> basis_projectors(const MeasurementBasis& basis) {
  const double c = std::cos(basis.theta / 2.0);
  const double s = std::sin(basis.theta / 2.0);
  const Complex e_minus = std::polar(1.0, -basis.phi);
  const Complex e_plus = std::polar(1.0, basis.phi);
  const std::array<Complex, 2> v0 = {c, -e_minus * s};
  const std::array<Complex, 2> v1 = {e_plus * s, c};
  const auto outer = [](const std::array<Complex, 2>& v) {
    Mat2 m;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  };
  return {outer(v0), outer(v1)};
}

std::array<double, 2> outcome_probabilities(const XParams& p, double theta) {
  const double shift = p.a * std::cos(theta);
  return {(1.0 + shift) / 2.0, (1.0 - shift) / 2.0};
}

ConditionalSpectrum conditional_spectrum(const XState& state, const MeasurementBasis& basis) {
  const BasisTerms bt = basis_terms(state.params(), basis);
  ConditionalSpectrum cs{};
  cs.p = outcome_probabilities(state.params(), basis.theta);
  for (int k = 0; k < 2; ++k) {
    if (cs.p[k] <= kDegenerateOutcome) {
      std::ostringstream os;
      os << "measurement outcome " << k << " has probability " << cs.p[k] << "; conditional state undefined";
      throw DegenerateOutcomeError(os.str());
    }
    const double half_gap = bt.s[k] / (4.0 * cs.p[k]);
    cs.w[k] = {clip_unit(0.5 + half_gap), clip_unit(0.5 - half_gap)};
  }
  return cs;
}

double avg_conditional_entropy(const XState& state, const MeasurementBasis& basis) {
  const BasisTerms bt = basis_terms(state.params(), basis);
  const auto p = outcome_probabilities(state.params(), basis.theta);
  double total = 0.0;
  for (int k = 0; k < 2; ++k) {
    if (p[k] <= kDegenerateOutcome) continue;
    const double half_gap = bt.s[k] / (4.0 * p[k]);
    const std::array<double, 2> w = {clip_unit(0.5 + half_gap), clip_unit(0.5 - half_gap)};
    total += p[k] * spectrum_entropy(w);
  }
  return total;
}

double post_measurement_entropy(const XState& state, const MeasurementBasis& basis) {
  const BasisTerms bt = basis_terms(state.params(), basis);
  std::array<double, 4> lambda{};
  for (int k = 0; k < 2; ++k) {
    lambda[2 * k] = (bt.pk2[k] + bt.s[k]) / 4.0;
    lambda[2 * k + 1] = (bt.pk2[k] - bt.s[k]) / 4.0;
  }
  return spectrum_entropy(lambda);
}

double stationarity_h_theta(const XState& state, const MeasurementBasis& basis) {
  const XParams& p = state.params();
  const BasisTerms bt = basis_terms(p, basis);
  require_regular(bt, basis);
  const double curvature = bt.c_phi * bt.cos_t;  // R csc(theta) cot(theta)
  double h = p.a * std::log2((bt.pk2[1] * bt.pk2[1] - bt.s[1] * bt.s[1]) /
                             (bt.pk2[0] * bt.pk2[0] - bt.s[0] * bt.s[0]));
  h += (curvature - p.cz * bt.t[0]) / bt.s[0] * log_ratio(bt.pk2[0], bt.s[0]);
  h += (curvature + p.cz * bt.t[1]) / bt.s[1] * log_ratio(bt.pk2[1], bt.s[1]);
  return h;
}

double stationarity_h_phi(const XState& state, const MeasurementBasis& basis) {
  const BasisTerms bt = basis_terms(state.params(), basis);
  require_regular(bt, basis);
  return log_ratio(bt.pk2[0], bt.s[0]) / bt.s[0] + log_ratio(bt.pk2[1], bt.s[1]) / bt.s[1];
}

double dG_dtheta(const XState& state, const MeasurementBasis& basis) {
  return -std::sin(basis.theta) / 4.0 * stationarity_h_theta(state, basis);
}

double dG_dphi(const XState& state, const MeasurementBasis& basis) {
  const XParams& p = state.params();
  const double ef = (p.cx + p.cy) * (p.cx - p.cy) / 16.0;
  const double sin_t = std::sin(basis.theta);
  return 2.0 * ef * sin_t * sin_t * std::sin(2.0 * basis.phi) * stationarity_h_phi(state, basis);
}

XParams canonicalize(const XParams& p) {
  XParams out = p;
  if (std::abs(out.cy) > std::abs(out.cx)) std::swap(out.cx, out.cy);
  if (out.cx < 0.0) {
    out.cx = -out.cx;
    out.cy = -out.cy;
  }
  return out;
}

XParams swap_subsystems(const XParams& p) {
  XParams out = p;
  std::swap(out.a, out.b);
  return out;
}

Mat2 conditional_state_matrix(const TwoQubit& rho, const MeasurementBasis& basis, int outcome) {
  if (outcome != 0 && outcome != 1) throw InputError("measurement outcome must be 0 or 1");
  const auto [m0, m1] = basis_projectors(basis);
  const Mat4 lifted = lift_a(outcome == 0 ? m0 : m1);
  const Mat4 post = lifted * rho.matrix() * lifted;
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = post(i, j) + post(2 + i, 2 + j);
  return out;
}

Mat4 measured_state_matrix(const TwoQubit& rho, const MeasurementBasis& basis) {
  const auto [m0, m1] = basis_projectors(basis);
  const Mat4 l0 = lift_a(m0);
  const Mat4 l1 = lift_a(m1);
  return l0 * rho.matrix() * l0 + l1 * rho.matrix() * l1;
}

}  // namespace qcorr
