#include "nhrlc/cxmat.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "nhrlc/errors.hpp"

namespace nhrlc {

namespace {

constexpr double kDegenerateBand = 1e-10;
constexpr double kHermitianTol = 1e-12;

// sinh(z) / z, with the series used near the origin.
Complex sinhc(Complex z) {
  if (std::abs(z) < 1e-3) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

CVec2 unit(CVec2 v) {
  const double n = norm(v);
  return n > 0.0 ? CVec2{v[0] / n, v[1] / n} : v;
}

// Eigenvector of m for eigenvalue lambda from the better-conditioned row of (m - lambda I).
CVec2 kernel_vector(const CMat2& m, Complex lambda) {
  const CVec2 from_row0{m(0, 1), lambda - m(0, 0)};
  const CVec2 from_row1{lambda - m(1, 1), m(1, 0)};
  const CVec2& v = norm(from_row0) >= norm(from_row1) ? from_row0 : from_row1;
  return unit(v);
}

Complex det3(const CMat4& m, std::size_t skip_col) {
  std::array<std::size_t, 3> cols{};
  std::size_t k = 0;
  for (std::size_t c = 0; c < 4; ++c)
    if (c != skip_col) cols[k++] = c;
  auto at = [&](std::size_t r, std::size_t c) { return m(r + 1, cols[c]); };
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

}  // namespace

double operator_norm(const CMat2& m) {
  double tr_gram = 0.0;
  for (const auto& z : m.a) tr_gram += std::norm(z);
  const double det_gram = std::norm(det(m));
  const double disc = std::max(0.0, tr_gram * tr_gram - 4.0 * det_gram);
  return std::sqrt(0.5 * (tr_gram + std::sqrt(disc)));
}

Complex det(const CMat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Complex det(const CMat4& m) {
  Complex d = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    const double sign = (c % 2 == 0) ? 1.0 : -1.0;
    d += sign * m(0, c) * det3(m, c);
  }
  return d;
}

CMat2 inverse(const CMat2& m) {
  const Complex d = det(m);
  if (d == 0.0) throw Error("inverse: singular 2x2 matrix");
  return (1.0 / d) * mat2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
}

CMat4 inverse(const CMat4& m) {
  // Gauss-Jordan with partial pivoting.
  CMat4 w = m;
  CMat4 inv = CMat4::identity();
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(w(r, col)) > std::abs(w(pivot, col))) pivot = r;
    if (w(pivot, col) == 0.0) throw Error("inverse: singular 4x4 matrix");
    for (std::size_t c = 0; c < 4; ++c) {
      std::swap(w(col, c), w(pivot, c));
      std::swap(inv(col, c), inv(pivot, c));
    }
    const Complex scale = 1.0 / w(col, col);
    for (std::size_t c = 0; c < 4; ++c) {
      w(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Complex f = w(r, col);
      for (std::size_t c = 0; c < 4; ++c) {
        w(r, c) -= f * w(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

TraceDet trace_det(const CMat2& m) { return {trace(m), det(m)}; }
TraceDet trace_det(const CMat4& m) { return {trace(m), det(m)}; }

Eigen2 eig2(const CMat2& m) {
  const Complex tr = trace(m);
  const Complex d = det(m);
  const Complex disc = tr * tr - 4.0 * d;

  Eigen2 out;
  if (std::abs(disc) < kDegenerateBand * (std::norm(tr) + 1.0)) {
    const Complex lambda = 0.5 * tr;
    out.degenerate = true;
    out.values = {lambda, lambda};
    const CMat2 nil = m - lambda * CMat2::identity();
    if (max_abs(nil) <= 1e-14 * std::max(1.0, max_abs(m))) {
      out.vectors = {CVec2{1.0, 0.0}, CVec2{0.0, 1.0}};
    } else {
      const CVec2 v = kernel_vector(m, lambda);
      out.vectors = {v, v};
    }
    return out;
  }

  // Pick the root sign that avoids cancellation, then recover the other via Vieta.
  Complex sq = std::sqrt(disc);
  if (std::real(std::conj(tr) * sq) < 0.0) sq = -sq;
  const Complex l1 = 0.5 * (tr + sq);
  const Complex l2 = (l1 != 0.0) ? d / l1 : 0.5 * (tr - sq);

  std::array<Complex, 2> vals{l1, l2};
  const double tie = 1e-12 * (1.0 + std::max(std::abs(l1), std::abs(l2)));
  const double dim = vals[0].imag() - vals[1].imag();
  const bool swap = std::abs(dim) <= tie ? vals[0].real() < vals[1].real() : dim < 0.0;
  if (swap) std::swap(vals[0], vals[1]);

  out.values = vals;
  out.vectors = {kernel_vector(m, vals[0]), kernel_vector(m, vals[1])};
  return out;
}

CMat2 expm(const CMat2& m, double t) {
  if (t == 0.0) return CMat2::identity();
  const Eigen2 e = eig2(m);
  const CMat2 id = CMat2::identity();
  if (e.degenerate) {
    const Complex lambda = e.values[0];
    const CMat2 nil = m - lambda * id;
    return std::exp(t * lambda) * (id + t * nil);
  }
  const Complex mu = 0.5 * (e.values[0] + e.values[1]);
  const Complex delta = 0.5 * (e.values[0] - e.values[1]);
  const Complex z = t * delta;
  return std::exp(t * mu) * (std::cosh(z) * id + (t * sinhc(z)) * (m - mu * id));
}

CMat2 sqrt_pos_hermitian(const CMat2& m) {
  const double scale = std::max(1.0, max_abs(m));
  if (!is_finite(m) || max_abs(m - adjoint(m)) > kHermitianTol * scale)
    throw NotPositiveHermitian("sqrt_pos_hermitian: matrix is not Hermitian");
  const double tr = trace(m).real();
  const double d = det(m).real();
  if (!(tr > 0.0) || !(d > 0.0))
    throw NotPositiveHermitian("sqrt_pos_hermitian: matrix is not positive definite");
  const double s = std::sqrt(d);
  const double tau = std::sqrt(tr + 2.0 * s);
  const CMat2 p = (1.0 / tau) * (m + Complex(s) * CMat2::identity());
  return 0.5 * (p + adjoint(p));
}

Svd4 svd(const CMat4& m) {
  CMat4 w = m;
  CMat4 v = CMat4::identity();
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
          alpha += std::norm(w(i, p));
          beta += std::norm(w(i, q));
          gamma += std::conj(w(i, p)) * w(i, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // Rotate column q's phase so the Gram off-diagonal is real, then apply
        // the real Jacobi rotation that zeroes it.
        const Complex phase = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < 4; ++i) {
          const Complex wp = w(i, p);
          const Complex wq = w(i, q) * phase;
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
          const Complex vp = v(i, p);
          const Complex vq = v(i, q) * phase;
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, 4> sigma{};
  for (std::size_t j = 0; j < 4; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::norm(w(i, j));
    sigma[j] = std::sqrt(s);
  }
  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Svd4 out;
  for (std::size_t j = 0; j < 4; ++j) {
    out.sigma[j] = sigma[order[j]];
    for (std::size_t i = 0; i < 4; ++i) out.v(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<CVec4> nullspace(const CMat4& m, double rel_tol) {
  const Svd4 s = svd(m);
  const double cutoff = rel_tol * s.sigma[0];
  std::vector<CVec4> basis;
  for (std::size_t j = 0; j < 4; ++j) {
    if (s.sigma[0] == 0.0 || s.sigma[j] < cutoff) {
      CVec4 col;
      for (std::size_t i = 0; i < 4; ++i) col[i] = s.v(i, j);
      basis.push_back(col);
    }
  }
  return basis;
}

std::array<Complex, 5> characteristic_polynomial(const CMat4& m) {
  std::array<Complex, 5> c{};
  c[0] = 1.0;
  CMat4 mk = CMat4::zero();
  for (std::size_t k = 1; k <= 4; ++k) {
    mk = m * mk + c[k - 1] * CMat4::identity();
    c[k] = -trace(m * mk) / static_cast<double>(k);
  }
  return c;
}

}  // namespace nhrlc
