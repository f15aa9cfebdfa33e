#include "nhrlc/circuit.hpp"

#include <cmath>
#include <string>

#include "nhrlc/errors.hpp"

namespace nhrlc {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kUnbroken:
      return "UP";
    case Phase::kBroken:
      return "BP";
    case Phase::kExceptional:
      return "EP";
  }
  return "?";
}

CircuitParams CircuitParams::from_rlc(double resistance, double inductance, double capacitance) {
  if (!std::isfinite(resistance) || !std::isfinite(inductance) || !std::isfinite(capacitance))
    throw InvalidParameters("circuit parameters must be finite");
  if (!(inductance > 0.0)) throw InvalidParameters("inductance L must be > 0");
  if (!(capacitance > 0.0)) throw InvalidParameters("capacitance C must be > 0");
  const double alpha = resistance / (2.0 * inductance);
  const double omega0 = 1.0 / std::sqrt(inductance * capacitance);
  if (!(omega0 > 0.0) || !std::isfinite(omega0))
    throw InvalidParameters("omega0 = 1/sqrt(LC) must be finite and > 0");
  return CircuitParams(alpha, omega0, Rlc{resistance, inductance, capacitance});
}

CircuitParams CircuitParams::from_alpha_omega0(double alpha, double omega0) {
  if (!std::isfinite(alpha) || !std::isfinite(omega0))
    throw InvalidParameters("alpha and omega0 must be finite");
  if (!(omega0 > 0.0)) throw InvalidParameters("omega0 must be > 0");
  return CircuitParams(alpha, omega0, std::nullopt);
}

double CircuitParams::damped_frequency() const {
  return std::sqrt(std::abs(omega0_ * omega0_ - alpha_ * alpha_));
}

CMat2 hamiltonian(const CircuitParams& p) {
  const double w2 = p.omega0() * p.omega0();
  return kI * mat2(0.0, 1.0, -w2, -2.0 * p.alpha());
}

CMat2 gain_hamiltonian(const CircuitParams& p) { return adjoint(hamiltonian(p)); }

HermitianSplit hermitian_split(const CMat2& h) {
  const CMat2 hd = adjoint(h);
  return {0.5 * (h + hd), 0.5 * (h - hd)};
}

Phase classify(const CircuitParams& p) {
  const double a = p.alpha();
  const double w = p.omega0();
  if (std::abs(a - w) <= kEpBand * w) return Phase::kExceptional;
  return a > w ? Phase::kUnbroken : Phase::kBroken;
}

}  // namespace nhrlc
