#pragma once

// Independent reference values for the tests. Nothing here calls the
// optimizer or the closed-form measurement code it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "qcorr/qmat.hpp"

namespace qcorr::oracle {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Direct h(x), written out independently of qcorr::binary_entropy.
inline double h(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log(x) / std::numbers::ln2 - (1.0 - x) * std::log(1.0 - x) / std::numbers::ln2;
}

inline double central_difference(const std::function<double(double)>& f, double x, double step = 1e-6) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

inline double relative_error(double value, double reference) {
  const double scale = std::max(std::abs(value), std::abs(reference));
  return scale == 0.0 ? 0.0 : std::abs(value - reference) / scale;
}

// Bell-diagonal eigenvalues A_jkl = (1 + (-1)^j cx + (-1)^k cy + (-1)^l cz) / 4
// over jkl in {111, 100, 010, 001}.
inline std::array<double, 4> bell_diagonal_weights(double cx, double cy, double cz) {
  return {(1.0 - cx - cy - cz) / 4.0, (1.0 - cx + cy + cz) / 4.0, (1.0 + cx - cy + cz) / 4.0,
          (1.0 + cx + cy - cz) / 4.0};
}

inline double sum_a_log_a(const std::array<double, 4>& weights) {
  double s = 0.0;
  for (double w : weights)
    if (w > 0.0) s += w * std::log2(w);
  return s;
}

// Bell-diagonal discord: 1 + h((1 - c)/2) + sum_s A_s log2 A_s, c = max |c_i|.
// The leading 1 is S(rho_A) of the maximally mixed marginal.
inline double bell_diagonal_discord(double cx, double cy, double cz) {
  const double c = std::max({std::abs(cx), std::abs(cy), std::abs(cz)});
  return 1.0 + h((1.0 - c) / 2.0) + sum_a_log_a(bell_diagonal_weights(cx, cy, cz));
}

// The same expression without the S(rho_A) = 1 term.
inline double bell_diagonal_expression_without_marginal(double cx, double cy, double cz) {
  const double c = std::max({std::abs(cx), std::abs(cy), std::abs(cz)});
  return h((1.0 - c) / 2.0) + sum_a_log_a(bell_diagonal_weights(cx, cy, cz));
}

// Deficit of q|psi-><psi-| + (1-q)|00><00| when its optimum sits at theta = pi/2:
// h((1 + sqrt(1 - C^2)) / 2) - h(q) + 1 with C^2 = 2 q (1 - q).
inline double singlet_mixture_eof_bc(double q) {
  return h((1.0 + std::sqrt(1.0 - 2.0 * q * (1.0 - q))) / 2.0);
}

inline double singlet_mixture_deficit(double q) { return singlet_mixture_eof_bc(q) - h(q) + 1.0; }

// Matrix of q|psi-><psi-| + (1-q)|00><00| assembled from the two pure states.
inline Mat4 singlet_mixture_matrix(double q) {
  Mat4 m;
  m(0, 0) = 1.0 - q;
  m(1, 1) = q / 2.0;
  m(2, 2) = q / 2.0;
  m(1, 2) = -q / 2.0;
  m(2, 1) = -q / 2.0;
  return m;
}

}  // namespace qcorr::oracle
