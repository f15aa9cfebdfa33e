#pragma once

#include <optional>
#include <string_view>

#include "nhrlc/cxmat.hpp"

namespace nhrlc {

/// Dynamical phase of the series RLC circuit.
enum class Phase {
  kUnbroken,     // alpha > omega0: overdamped, purely imaginary spectrum of H
  kBroken,       // alpha < omega0: underdamped
  kExceptional,  // alpha == omega0 within 1e-12 * omega0
};

std::string_view to_string(Phase phase);

/// Relative band around alpha == omega0 treated as the exceptional point.
inline constexpr double kEpBand = 1e-12;

/// Series RLC parameters. Stored as (alpha, omega0); the physical (R, L, C)
/// triple is kept when the circuit was built from it.
class CircuitParams {
 public:
  struct Rlc {
    double resistance;
    double inductance;
    double capacitance;
  };

  /// R may be negative (gain element); L and C must be positive.
  static CircuitParams from_rlc(double resistance, double inductance, double capacitance);
  static CircuitParams from_alpha_omega0(double alpha, double omega0);

  double alpha() const { return alpha_; }
  double omega0() const { return omega0_; }
  const std::optional<Rlc>& rlc() const { return rlc_; }

  /// sqrt(omega0^2 - alpha^2) in the broken phase (the ringing frequency).
  double damped_frequency() const;

 private:
  CircuitParams(double alpha, double omega0, std::optional<Rlc> rlc)
      : alpha_(alpha), omega0_(omega0), rlc_(rlc) {}

  double alpha_;
  double omega0_;
  std::optional<Rlc> rlc_;
};

/// H = i [[0, 1], [-omega0^2, -2 alpha]]: i dPhi/dt = H Phi with Phi = (I, dI/dt).
CMat2 hamiltonian(const CircuitParams& p);

/// H^dagger, whose first component obeys y'' - 2 alpha y' + omega0^2 y = 0.
CMat2 gain_hamiltonian(const CircuitParams& p);

struct HermitianSplit {
  CMat2 hermitian;       // (H + H^dagger) / 2
  CMat2 anti_hermitian;  // (H - H^dagger) / 2
};

HermitianSplit hermitian_split(const CMat2& h);

Phase classify(const CircuitParams& p);

}  // namespace nhrlc
