#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "nhrlc/circuit.hpp"
#include "nhrlc/cxmat.hpp"

namespace nhrlc {

/// Initial current, capacitor voltage V0 = (1/C) integral of I, and inductance.
struct InitialData {
  double i0;
  double v0;
  double inductance;

  /// dI/dt at t = 0: -alpha I0 - V0 / L.
  double current_derivative(const CircuitParams& p) const;
  /// (I0, dI/dt(0)).
  CVec2 state(const CircuitParams& p) const;
};

enum class Method { kClosedForm, kSpectral, kIntegrated, kExpm };

std::string_view to_string(Method method);

/// States are (x1, x2) = (I, dI/dt), sampled on `times`.
struct Trajectory {
  std::vector<double> times;
  std::vector<CVec2> states;
  Method method;
};

/// 0, dt, 2 dt, ..., up to t_max (t_max included when it is a multiple of dt
/// up to rounding). Throws InvalidParameters unless dt > 0 and t_max >= 0.
std::vector<double> uniform_grid(double t_max, double dt);

/// I(t) = exp(-alpha t) (I0 cos(wd t) - V0/(L wd) sin(wd t)), wd = sqrt(omega0^2 - alpha^2),
/// with the analytic derivative in x2. Throws PhaseUnsupported outside BP.
Trajectory evolve_closed_form(const CircuitParams& p, const InitialData& init,
                              const std::vector<double>& times);

/// Phi(t) = sum_a b_a exp(-i lambda_a t) phi_a. Throws ExceptionalPointError at the EP.
Trajectory evolve_spectral(const CircuitParams& p, const InitialData& init,
                           const std::vector<double>& times);

/// Classical fixed-step RK4 on i dPhi/dt = H Phi. Between grid points the
/// interval is split into ceil(dt / step) equal substeps. Throws
/// InvalidParameters unless step > 0.
Trajectory evolve_integrated(const CMat2& h, const CVec2& state0, const std::vector<double>& times,
                             double step);
Trajectory evolve_integrated(const CircuitParams& p, const InitialData& init,
                             const std::vector<double>& times, double step);

/// Phi(t) = exp(-i H t) Phi(0), valid at the EP as well.
Trajectory evolve_expm(const CMat2& h, const CVec2& state0, const std::vector<double>& times);
Trajectory evolve_expm(const CircuitParams& p, const InitialData& init,
                       const std::vector<double>& times);

struct Comparison {
  double max_abs_error;  // max over the grid of ||state_a - state_b||
  double at_time;
};

/// Throws GridMismatch unless both trajectories share their time grid.
Comparison compare(const Trajectory& a, const Trajectory& b);

/// CSV with header t,re_x1,im_x1,re_x2,im_x2,method.
void write_csv(std::ostream& out, const Trajectory& traj);

}  // namespace nhrlc
