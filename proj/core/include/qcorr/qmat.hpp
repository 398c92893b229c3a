#pragma once

// Fixed-size complex matrices, two-qubit X states and entropy primitives.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "qcorr/errors.hpp"

namespace qcorr {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
// Eigenvalues in [-kPositivityTol, 0) are treated as zero.
inline constexpr double kPositivityTol = 1e-10;

/// Dense N x N complex matrix, row-major. Only N = 2 and N = 4 are used.
template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "qcorr matrices are single- or two-qubit");

 public:
  static constexpr std::size_t dim = N;

  Matrix() = default;

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * N + c]; }

  std::span<const Complex, N * N> entries() const { return entries_; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.entries_[i] = std::conj(entries_[i]);
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<Complex, N * N> entries_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

Mat4 kron(const Mat2& lhs, const Mat2& rhs);

/// Largest entrywise |M - M^dagger|.
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = r; c < N; ++c)
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
  return worst;
}

/// Max entrywise distance; used by tests and round-trip checks.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

/// Real spectrum of a Hermitian matrix in descending order.
///
/// Dimension 2 uses the closed quadratic form; dimension 4 runs cyclic
/// complex Jacobi rotations until the off-diagonal Frobenius norm is
/// at most 1e-13. Throws InputError if `m` is not Hermitian within 1e-12.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m);

template <std::size_t N>
struct Eigensystem {
  std::array<double, N> values;  // descending
  Matrix<N> vectors;             // column i pairs with values[i]
};

template <std::size_t N>
Eigensystem<N> hermitian_eigensystem(const Matrix<N>& m);

/// Validated density matrix: Hermitian, unit trace, spectrum >= -1e-10.
/// The (clipped) spectrum is computed once at validation and kept.
template <std::size_t N>
class DensityMatrix {
 public:
  /// Throws InputError (not Hermitian, bad trace) or InvalidStateError.
  static DensityMatrix validated(const Matrix<N>& m);

  const Matrix<N>& matrix() const noexcept { return matrix_; }
  const std::array<double, N>& spectrum() const noexcept { return spectrum_; }

 private:
  DensityMatrix(const Matrix<N>& m, const std::array<double, N>& s) : matrix_(m), spectrum_(s) {}

  Matrix<N> matrix_;
  std::array<double, N> spectrum_;
};

using Qubit = DensityMatrix<2>;
using TwoQubit = DensityMatrix<4>;

/// Bloch coefficients of an X state:
/// rho = (I x I + a Z x I + b I x Z + cx X x X + cy Y x Y + cz Z x Z) / 4.
struct XParams {
  double a = 0.0;
  double b = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  double cz = 0.0;

  friend bool operator==(const XParams&, const XParams&) = default;
};

double max_abs_diff(const XParams& lhs, const XParams& rhs);

/// Builds the X-state density matrix. Coefficients must lie in [-1, 1]
/// (InputError); the spectrum is checked in full, since the box alone
/// admits non-states (InvalidStateError with the most negative eigenvalue).
TwoQubit x_state_from_params(const XParams& p);

/// Inverse Pauli decomposition. Throws ShapeError if any entry off the
/// diagonal and anti-diagonal exceeds 1e-10 in magnitude.
XParams params_from_density(const TwoQubit& rho);

/// Analytic X-state spectrum from its two 2x2 blocks, descending.
std::array<double, 4> x_state_spectrum(const XParams& p);

/// q |psi-><psi-| + (1 - q) |00><00|.
XParams singlet_mixture_params(double q);

/// -sum lambda log2 lambda with 0 log 0 = 0. Values in [-1e-10, 0) count as
/// zero; anything lower throws InvalidStateError.
double spectrum_entropy(std::span<const double> spectrum);

template <std::size_t N>
double von_neumann_entropy(const DensityMatrix<N>& rho) {
  return spectrum_entropy(rho.spectrum());
}

/// h(x) = -x log2 x - (1-x) log2(1-x). Accepts x within 1e-12 of [0, 1].
double binary_entropy(double x);

enum class Subsystem { A, B };

/// Reduced state of the kept qubit.
Qubit partial_trace(const TwoQubit& rho, Subsystem keep);

/// Validated X state with its cached entropies.
class XState {
 public:
  static XState from_params(const XParams& p);

  const XParams& params() const noexcept { return params_; }
  const TwoQubit& density() const noexcept { return density_; }
  double entropy_ab() const noexcept { return entropy_ab_; }
  double entropy_a() const noexcept { return entropy_a_; }
  double entropy_b() const noexcept { return entropy_b_; }

 private:
  XState(const XParams& p, const TwoQubit& rho);

  XParams params_;
  TwoQubit density_;
  double entropy_ab_;
  double entropy_a_;
  double entropy_b_;
};

}  // namespace qcorr
