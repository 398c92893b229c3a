#include "qcorr/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace qcorr {

namespace pauli {
Mat2 identity() { return Mat2::identity(); }

Mat2 x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat2 y() {
  Mat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

Mat2 z() { return Mat2::diagonal({1.0, -1.0}); }
}  // namespace pauli

Mat4 kron(const Mat2& lhs, const Mat2& rhs) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = lhs(i, j) * rhs(k, l);
  return out;
}

template <std::size_t N>
DensityMatrix<N> DensityMatrix<N>::validated(const Matrix<N>& m) {
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol) {
    std::ostringstream os;
    os << "density matrix trace is " << tr.real() << (tr.imag() < 0 ? " - " : " + ") << std::abs(tr.imag())
       << "i, expected 1";
    throw InputError(os.str());
  }
  auto spectrum = hermitian_eigenvalues(m);
  const double lowest = spectrum.back();
  if (lowest < -kPositivityTol) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite (most negative eigenvalue " << lowest << ")";
    throw InvalidStateError(os.str(), lowest);
  }
  for (auto& s : spectrum) s = std::max(s, 0.0);
  return DensityMatrix(m, spectrum);
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

double max_abs_diff(const XParams& lhs, const XParams& rhs) {
  return std::max({std::abs(lhs.a - rhs.a), std::abs(lhs.b - rhs.b), std::abs(lhs.cx - rhs.cx),
                   std::abs(lhs.cy - rhs.cy), std::abs(lhs.cz - rhs.cz)});
}

TwoQubit x_state_from_params(const XParams& p) {
  const std::pair<const char*, double> fields[] = {
      {"a", p.a}, {"b", p.b}, {"cx", p.cx}, {"cy", p.cy}, {"cz", p.cz}};
  for (const auto& [name, value] : fields) {
    if (!(value >= -1.0 && value <= 1.0)) {
      std::ostringstream os;
      os << "X-state coefficient " << name << " = " << value << " lies outside [-1, 1]";
      throw InputError(os.str());
    }
  }
  const Mat2 i2 = pauli::identity();
  Mat4 m = kron(i2, i2);
  m += p.a * kron(pauli::z(), i2);
  m += p.b * kron(i2, pauli::z());
  m += p.cx * kron(pauli::x(), pauli::x());
  m += p.cy * kron(pauli::y(), pauli::y());
  m += p.cz * kron(pauli::z(), pauli::z());
  m *= 0.25;
  return TwoQubit::validated(m);
}

XParams params_from_density(const TwoQubit& rho) {
  const Mat4& m = rho.matrix();
  std::vector<std::pair<int, int>> offending;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c && r + c != 3 && std::abs(m(r, c)) > kPositivityTol) offending.emplace_back(r, c);
  if (!offending.empty()) {
    std::ostringstream os;
    os << "density matrix is not of X form; offending entries:";
    for (auto [r, c] : offending) os << " (" << r << "," << c << ")";
    throw ShapeError(os.str(), std::move(offending));
  }
  const auto expect = [&](const Mat2& lhs, const Mat2& rhs) {
    return (m * kron(lhs, rhs)).trace().real();
  };
  // Rounding can push a coefficient of a boundary state just past +/-1.
  const auto coefficient = [&](const Mat2& lhs, const Mat2& rhs) {
    const double v = expect(lhs, rhs);
    return std::abs(v) <= 1.0 + kTraceTol ? std::clamp(v, -1.0, 1.0) : v;
  };
  const Mat2 i2 = pauli::identity();
  return XParams{
      .a = coefficient(pauli::z(), i2),
      .b = coefficient(i2, pauli::z()),
      .cx = coefficient(pauli::x(), pauli::x()),
      .cy = coefficient(pauli::y(), pauli::y()),
      .cz = coefficient(pauli::z(), pauli::z()),
  };
}

std::array<double, 4> x_state_spectrum(const XParams& p) {
  // Blocks {|00>, |11>} and {|01>, |10>}.
  const double r_outer = std::hypot(p.a + p.b, p.cx - p.cy);
  const double r_inner = std::hypot(p.a - p.b, p.cx + p.cy);
  std::array<double, 4> s = {
      (1.0 + p.cz + r_outer) / 4.0,
      (1.0 + p.cz - r_outer) / 4.0,
      (1.0 - p.cz + r_inner) / 4.0,
      (1.0 - p.cz - r_inner) / 4.0,
  };
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

XParams singlet_mixture_params(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("mixing weight q must lie in [0, 1]");
  return XParams{.a = 1.0 - q, .b = 1.0 - q, .cx = -q, .cy = -q, .cz = 1.0 - 2.0 * q};
}

double spectrum_entropy(std::span<const double> spectrum) {
  double s = 0.0;
  for (double lambda : spectrum) {
    if (lambda < -kPositivityTol) {
      throw InvalidStateError("negative eigenvalue " + std::to_string(lambda) + " in entropy", lambda);
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw InputError("binary entropy argument " + std::to_string(x) + " outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

Qubit partial_trace(const TwoQubit& rho, Subsystem keep) {
  const Mat4& m = rho.matrix();
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        // index = 2 * (A index) + (B index)
        out(i, j) += keep == Subsystem::A ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
      }
  return Qubit::validated(out);
}

XState::XState(const XParams& p, const TwoQubit& rho)
    : params_(p),
      density_(rho),
      entropy_ab_(von_neumann_entropy(rho)),
      entropy_a_(binary_entropy((1.0 + p.a) / 2.0)),
      entropy_b_(binary_entropy((1.0 + p.b) / 2.0)) {}

XState XState::from_params(const XParams& p) { return XState(p, x_state_from_params(p)); }

}  // namespace qcorr
