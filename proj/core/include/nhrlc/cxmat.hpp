#pragma once

// Small dense complex linear algebra (2x2 and 4x4) used throughout the library.
// Matrices are row-major value types; all free functions are pure.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace nhrlc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
using CVec = std::array<Complex, N>;

using CVec2 = CVec<2>;
using CVec4 = CVec<4>;

template <std::size_t N>
struct CMat {
  std::array<Complex, N * N> a{};

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

  static constexpr CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }
  static constexpr CMat zero() { return CMat{}; }

  friend bool operator==(const CMat&, const CMat&) = default;
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

/// Builds a 2x2 matrix from rows.
inline CMat2 mat2(Complex a00, Complex a01, Complex a10, Complex a11) {
  CMat2 m;
  m(0, 0) = a00;
  m(0, 1) = a01;
  m(1, 0) = a10;
  m(1, 1) = a11;
  return m;
}

template <std::size_t N>
CMat<N> operator+(const CMat<N>& x, const CMat<N>& y) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <std::size_t N>
CMat<N> operator-(const CMat<N>& x, const CMat<N>& y) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <std::size_t N>
CMat<N> operator-(const CMat<N>& x) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = -x.a[i];
  return r;
}

template <std::size_t N>
CMat<N> operator*(Complex s, const CMat<N>& x) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = s * x.a[i];
  return r;
}

template <std::size_t N>
CMat<N> operator*(const CMat<N>& x, Complex s) {
  return s * x;
}

template <std::size_t N>
CMat<N> operator*(const CMat<N>& x, const CMat<N>& y) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const Complex xik = x(i, k);
      for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

template <std::size_t N>
CVec<N> operator*(const CMat<N>& x, const CVec<N>& v) {
  CVec<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += x(i, j) * v[j];
  return r;
}

template <std::size_t N>
CVec<N> operator+(const CVec<N>& x, const CVec<N>& y) {
  CVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
  return r;
}

template <std::size_t N>
CVec<N> operator-(const CVec<N>& x, const CVec<N>& y) {
  CVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
  return r;
}

template <std::size_t N>
CVec<N> operator*(Complex s, const CVec<N>& x) {
  CVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * x[i];
  return r;
}

template <std::size_t N>
CMat<N> adjoint(const CMat<N>& x) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

template <std::size_t N>
Complex trace(const CMat<N>& x) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += x(i, i);
  return t;
}

/// Entrywise complex conjugate (the antilinear time-reversal action).
template <std::size_t N>
CVec<N> conj(const CVec<N>& v) {
  CVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = std::conj(v[i]);
  return r;
}

/// <f, g>, conjugate-linear in the first slot.
template <std::size_t N>
Complex inner(const CVec<N>& f, const CVec<N>& g) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(f[i]) * g[i];
  return s;
}

template <std::size_t N>
double norm(const CVec<N>& v) {
  return std::sqrt(std::real(inner(v, v)));
}

/// |f><g|, i.e. h -> <g, h> f.
template <std::size_t N>
CMat<N> outer(const CVec<N>& f, const CVec<N>& g) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = f[i] * std::conj(g[j]);
  return r;
}

template <std::size_t N>
double frobenius_norm(const CMat<N>& x) {
  double s = 0.0;
  for (const auto& z : x.a) s += std::norm(z);
  return std::sqrt(s);
}

template <std::size_t N>
double max_abs(const CMat<N>& x) {
  double m = 0.0;
  for (const auto& z : x.a) m = std::max(m, std::abs(z));
  return m;
}

template <std::size_t N>
bool is_finite(const CMat<N>& x) {
  for (const auto& z : x.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

template <std::size_t N>
CMat<N> anticommutator(const CMat<N>& x, const CMat<N>& y) {
  return x * y + y * x;
}

template <std::size_t N>
CMat<N> commutator(const CMat<N>& x, const CMat<N>& y) {
  return x * y - y * x;
}

/// Largest singular value of a 2x2 matrix (closed form on the Gram matrix).
double operator_norm(const CMat2& m);

Complex det(const CMat2& m);
/// Cofactor expansion along the first row.
Complex det(const CMat4& m);

CMat2 inverse(const CMat2& m);
CMat4 inverse(const CMat4& m);

struct TraceDet {
  Complex trace;
  Complex det;
};

TraceDet trace_det(const CMat2& m);
TraceDet trace_det(const CMat4& m);

struct Eigen2 {
  /// Ordered by descending imaginary part, ties by descending real part.
  std::array<Complex, 2> values;
  /// Unit-norm eigenvectors; both slots hold the same vector for a
  /// non-diagonalizable degenerate matrix.
  std::array<CVec2, 2> vectors;
  bool degenerate = false;
};

/// Closed-form eigendecomposition of a 2x2 matrix.
///
/// The degenerate flag is set when the discriminant of the characteristic
/// polynomial is below 1e-10 * (|tr M|^2 + 1) in modulus.
Eigen2 eig2(const CMat2& m);

/// exp(t M).
///
/// Distinct eigenvalues mu +- delta: Sylvester's projector formula, written as
/// exp(t mu) [cosh(t delta) I + sinh(t delta)/delta (M - mu I)] so that it stays
/// well conditioned next to a coalescence. When eig2 flags degeneracy:
/// exp(t lambda) (I + t N) with N = M - lambda I.
CMat2 expm(const CMat2& m, double t);

/// Unique positive square root of a positive-definite Hermitian 2x2 matrix.
/// Throws NotPositiveHermitian when the input is not Hermitian (1e-12,
/// relative) or not positive definite.
CMat2 sqrt_pos_hermitian(const CMat2& m);

/// Singular values and right singular vectors of a 4x4 matrix via one-sided
/// Jacobi rotations. Singular values are sorted in descending order; column j
/// of `v` pairs with `sigma[j]`.
struct Svd4 {
  std::array<double, 4> sigma;
  CMat4 v;
};

Svd4 svd(const CMat4& m);

/// Right null space of `m`: singular vectors whose singular value is below
/// `rel_tol` times the largest one (everything, for the zero matrix).
std::vector<CVec4> nullspace(const CMat4& m, double rel_tol = 1e-10);

/// Coefficients [1, c1, c2, c3, c4] of det(x I - M) = x^4 + c1 x^3 + ... + c4,
/// by the Faddeev-LeVerrier recursion.
std::array<Complex, 5> characteristic_polynomial(const CMat4& m);

}  // namespace nhrlc
