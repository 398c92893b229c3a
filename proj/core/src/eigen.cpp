#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcorr/qmat.hpp"

namespace qcorr {
namespace {

constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 64;

template <std::size_t N>
void require_hermitian(const Matrix<N>& m) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= kHermitianTol)) {
    throw InputError("matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(defect) + ")");
  }
}

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q)
      if (p != q) sum += std::norm(a(p, q));
  return std::sqrt(sum);
}

// Cyclic Jacobi for complex Hermitian matrices. Each step zeroes a(p, q) with
// U = diag-phase * real rotation acting on the (p, q) plane, A <- U^H A U.
template <std::size_t N>
Eigensystem<N> jacobi(Matrix<N> a) {
  Matrix<N> v = Matrix<N>::identity();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalTol) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const Complex phase = a(p, q) / r;  // e^{i alpha}
        const Complex phase_c = std::conj(phase);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U_pp = c, U_pq = s, U_qp = -s e^{-i alpha}, U_qq = c e^{-i alpha}.
        for (std::size_t k = 0; k < N; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * phase_c * vkq;
          v(k, q) = s * vkp + c * phase_c * vkq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  Eigensystem<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (std::size_t k = 0; k < N; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

}  // namespace

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m) {
  require_hermitian(m);
  if constexpr (N == 2) {
    const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double half_diff = 0.5 * (m(0, 0).real() - m(1, 1).real());
    const double radius = std::sqrt(half_diff * half_diff + std::norm(m(0, 1)));
    return {mean + radius, mean - radius};
  } else {
    return jacobi(m).values;
  }
}

template std::array<double, 2> hermitian_eigenvalues<2>(const Mat2&);
template std::array<double, 4> hermitian_eigenvalues<4>(const Mat4&);

template <std::size_t N>
Eigensystem<N> hermitian_eigensystem(const Matrix<N>& m) {
  require_hermitian(m);
  return jacobi(m);
}

template Eigensystem<2> hermitian_eigensystem<2>(const Mat2&);
template Eigensystem<4> hermitian_eigensystem<4>(const Mat4&);

}  // namespace qcorr
