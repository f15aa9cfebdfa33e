#pragma once

#include <array>
#include <cstddef>

#include "nhrlc/circuit.hpp"
#include "nhrlc/cxmat.hpp"

namespace nhrlc {

/// Slot of the "+" and "-" labels in the two-element arrays below.
inline constexpr std::size_t kPlus = 0;
inline constexpr std::size_t kMinus = 1;

/// Eigenvectors of H (phi) and H^dagger (psi) with the phase-dependent
/// biorthogonal normalization:
///   BP: <phi_a, psi_a> = 1, <phi_a, psi_b> = 0 for a != b
///   UP: <phi_a, psi_a> = 0, <phi_a, psi_b> = 1 for a != b
/// Gauge: N_psi = 1, the normalization products are carried by N_phi.
struct BiorthogonalSystem {
  Phase phase;
  double alpha;
  double omega0;

  std::array<Complex, 2> lambda;  // H phi_a = lambda_a phi_a
  std::array<Complex, 2> mu;      // H^dagger psi_a = mu_a psi_a
  std::array<CVec2, 2> phi;
  std::array<CVec2, 2> psi;
  std::array<Complex, 2> n_phi;
  std::array<Complex, 2> n_psi;

  /// pairing(a, b) = <phi_a, psi_b>, evaluated on the normalized vectors.
  CMat2 pairing;

  /// Label b with <phi_a, psi_b> = 1.
  std::size_t dual(std::size_t a) const {
    return phase == Phase::kUnbroken ? 1 - a : a;
  }
};

/// Eigenvectors at alpha == omega0, where H is not diagonalizable.
struct EpSystem {
  Complex lambda_ep;
  Complex mu_ep;
  CVec2 phi_ep;  // unit norm, along (1, -alpha)
  CVec2 psi_ep;  // unit norm, along (1, 1/alpha)

  /// |<phi_ep, psi_ep>|
  double self_orthogonality_residual() const;
};

/// Throws ExceptionalPointError inside the EP band and PhaseUnsupported for
/// overdamped gain circuits (alpha <= -omega0).
BiorthogonalSystem eigensystem(const CircuitParams& p);

/// Throws NotExceptionalError unless classify(p) is the exceptional point.
EpSystem ep_system(const CircuitParams& p);

/// Coefficients b with f = b_+ phi_+ + b_- phi_-.
std::array<Complex, 2> expand(const BiorthogonalSystem& sys, const CVec2& f);

/// sum_a |phi_a><psi_dual(a)|, which is the identity in both phases.
CMat2 resolution_of_identity(const BiorthogonalSystem& sys);

}  // namespace nhrlc
