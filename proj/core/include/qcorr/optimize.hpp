#pragma once

// Scalar and 2-D derivative-free minimizers used by the correlation
// optimizer and the grid oracle.

#include <array>
#include <functional>

namespace qcorr {

struct ScalarMinimum {
  double x;
  double fx;
  int evaluations;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than `tol`.
/// Assumes f is unimodal on the bracket.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double tol);

struct PlanarMinimum {
  std::array<double, 2> x;
  double fx;
  int evaluations;
};

/// Nelder-Mead from `start` with an initial simplex of edge `step`. Stops when
/// the simplex value spread drops below `ftol` or after `max_evaluations`.
PlanarMinimum nelder_mead_minimize(const std::function<double(double, double)>& f,
                                   std::array<double, 2> start, double step, double ftol,
                                   int max_evaluations);

/// Bisection root of f on [lo, hi]; f(lo) and f(hi) must differ in sign.
/// Throws RootNotFoundError otherwise.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace qcorr
