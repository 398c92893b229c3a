#include "qcorr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int evaluations = 2;
  while (hi - lo > tol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    ++evaluations;
  }
  const double x = 0.5 * (lo + hi);
  const double fx = f(x);
  ++evaluations;
  // The midpoint can lose to an interior probe on flat plateaus.
  if (fc < fx && fc <= fd) return {c, fc, evaluations};
  if (fd < fx) return {d, fd, evaluations};
  return {x, fx, evaluations};
}

PlanarMinimum nelder_mead_minimize(const std::function<double(double, double)>& f,
                                   std::array<double, 2> start, double step, double ftol,
                                   int max_evaluations) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> pts = {start, Point{start[0] + step, start[1]}, Point{start[0], start[1] + step}};
  std::array<double, 3> vals{};
  int evaluations = 0;
  const auto eval = [&](const Point& p) {
    ++evaluations;
    return f(p[0], p[1]);
  };
  for (int i = 0; i < 3; ++i) vals[i] = eval(pts[i]);

  while (evaluations < max_evaluations) {
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return vals[i] < vals[j]; });
    const int best = order[0], mid = order[1], worst = order[2];
    if (vals[worst] - vals[best] <= ftol) break;

    const Point centroid = {(pts[best][0] + pts[mid][0]) / 2.0, (pts[best][1] + pts[mid][1]) / 2.0};
    const auto along = [&](double t) {
      return Point{centroid[0] + t * (pts[worst][0] - centroid[0]), centroid[1] + t * (pts[worst][1] - centroid[1])};
    };

    const Point reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < vals[best]) {
      const Point expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[worst] = expanded;
        vals[worst] = fe;
      } else {
        pts[worst] = reflected;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[mid]) {
      pts[worst] = reflected;
      vals[worst] = fr;
      continue;
    }
    const Point contracted = fr < vals[worst] ? along(-0.5) : along(0.5);
    const double fc = eval(contracted);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = fc;
      continue;
    }
    for (int i : {mid, worst}) {
      pts[i] = {(pts[i][0] + pts[best][0]) / 2.0, (pts[i][1] + pts[best][1]) / 2.0};
      vals[i] = eval(pts[i]);
    }
  }
  const auto it = std::min_element(vals.begin(), vals.end());
  return {pts[static_cast<std::size_t>(it - vals.begin())], *it, evaluations};
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0) || std::isnan(flo) || std::isnan(fhi)) {
    std::ostringstream os;
    os << "no sign change on [" << lo << ", " << hi << "] (f = " << flo << ", " << fhi << ")";
    throw RootNotFoundError(os.str());
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qcorr
