#include "nhrlc/spectral.hpp"

#include <cmath>

#include "nhrlc/errors.hpp"

namespace nhrlc {

namespace {

void require_diagonalizable(const CircuitParams& p) {
  const double a = p.alpha();
  const double w = p.omega0();
  if (classify(p) == Phase::kExceptional)
    throw ExceptionalPointError("H is not diagonalizable at alpha == omega0; use ep_system");
  if (a < 0.0 && (a <= -w || std::abs(a + w) <= kEpBand * w))
    throw PhaseUnsupported("overdamped gain circuit (alpha <= -omega0) is not supported");
}

CVec2 unit(const CVec2& v) {
  const double n = norm(v);
  return {v[0] / n, v[1] / n};
}

}  // namespace

double EpSystem::self_orthogonality_residual() const { return std::abs(inner(phi_ep, psi_ep)); }

BiorthogonalSystem eigensystem(const CircuitParams& p) {
  require_diagonalizable(p);
  const double a = p.alpha();
  const double w = p.omega0();
  const double w2 = w * w;

  BiorthogonalSystem s;
  s.phase = classify(p);
  s.alpha = a;
  s.omega0 = w;
  s.n_psi = {1.0, 1.0};

  if (s.phase == Phase::kBroken) {
    const double root = std::sqrt((w - a) * (w + a));
    s.lambda = {Complex(root, -a), Complex(-root, -a)};
    s.mu = {Complex(root, a), Complex(-root, a)};
    // conj(N_phi_a) N_psi_a = [1 + ((root +- i alpha) / omega0)^2]^-1; the bracket
    // factors as 2 root (root +- i alpha) / omega0^2, which avoids cancellation.
    s.n_phi[kPlus] = std::conj(w2 / (2.0 * root * Complex(root, a)));
    s.n_phi[kMinus] = std::conj(w2 / (2.0 * root * Complex(root, -a)));
  } else {
    const double root = std::sqrt((a - w) * (a + w));
    const double small = w2 / (a + root);  // alpha - root, without cancellation
    s.lambda = {kI * -small, kI * (-a - root)};
    s.mu = {kI * (a + root), kI * small};
    // conj(N_phi_-) N_psi_+ = [1 - ((root + alpha) / omega0)^2]^-1 = -omega0^2 / (2 root (root + alpha))
    // conj(N_phi_+) N_psi_- = [1 - ((root - alpha) / omega0)^2]^-1 = omega0^2 / (2 root (alpha - root))
    s.n_phi[kMinus] = -w2 / (2.0 * root * (root + a));
    s.n_phi[kPlus] = w2 / (2.0 * root * small);
  }

  for (std::size_t k = 0; k < 2; ++k) {
    s.phi[k] = s.n_phi[k] * CVec2{1.0, -kI * s.lambda[k]};
    s.psi[k] = s.n_psi[k] * CVec2{1.0, -kI * s.mu[k] / w2};
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s.pairing(i, j) = inner(s.phi[i], s.psi[j]);
  return s;
}

EpSystem ep_system(const CircuitParams& p) {
  if (classify(p) != Phase::kExceptional)
    throw NotExceptionalError("ep_system requires alpha == omega0");
  const double a = p.alpha();
  EpSystem e;
  e.lambda_ep = Complex(0.0, -a);
  e.mu_ep = Complex(0.0, a);
  e.phi_ep = unit(CVec2{1.0, -a});
  e.psi_ep = unit(CVec2{1.0, 1.0 / a});
  return e;
}

std::array<Complex, 2> expand(const BiorthogonalSystem& sys, const CVec2& f) {
  return {inner(sys.psi[sys.dual(kPlus)], f), inner(sys.psi[sys.dual(kMinus)], f)};
}

CMat2 resolution_of_identity(const BiorthogonalSystem& sys) {
  return outer(sys.phi[kPlus], sys.psi[sys.dual(kPlus)]) +
         outer(sys.phi[kMinus], sys.psi[sys.dual(kMinus)]);
}

}  // namespace nhrlc
