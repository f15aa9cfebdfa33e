#include "nhrlc/dynamics.hpp"

#include <cmath>
#include <ostream>

#include "nhrlc/errors.hpp"
#include "nhrlc/spectral.hpp"

namespace nhrlc {

namespace {

void check_init(const InitialData& init) {
  if (!std::isfinite(init.i0) || !std::isfinite(init.v0) || !std::isfinite(init.inductance))
    throw InvalidParameters("initial data must be finite");
  if (!(init.inductance > 0.0)) throw InvalidParameters("inductance L must be > 0");
}

}  // namespace

double InitialData::current_derivative(const CircuitParams& p) const {
  return -p.alpha() * i0 - v0 / inductance;
}

CVec2 InitialData::state(const CircuitParams& p) const {
  return {i0, current_derivative(p)};
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kClosedForm:
      return "closed-form";
    case Method::kSpectral:
      return "spectral";
    case Method::kIntegrated:
      return "integrated";
    case Method::kExpm:
      return "expm";
  }
  return "?";
}

std::vector<double> uniform_grid(double t_max, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidParameters("dt must be > 0");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw InvalidParameters("t_max must be >= 0");
  const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  std::vector<double> times(n + 1);
  for (std::size_t k = 0; k <= n; ++k) times[k] = static_cast<double>(k) * dt;
  return times;
}

Trajectory evolve_closed_form(const CircuitParams& p, const InitialData& init,
                              const std::vector<double>& times) {
  check_init(init);
  if (classify(p) != Phase::kBroken)
    throw PhaseUnsupported("closed form is only available in the broken phase (alpha < omega0)");
  const double a = p.alpha();
  const double wd = p.damped_frequency();
  const double sin_coeff = -init.v0 / (init.inductance * wd);
  const double dcos = -a * init.i0 - init.v0 / init.inductance;
  const double dsin = -a * sin_coeff - init.i0 * wd;

  Trajectory traj{times, {}, Method::kClosedForm};
  traj.states.reserve(times.size());
  for (double t : times) {
    const double env = std::exp(-a * t);
    const double c = std::cos(wd * t);
    const double s = std::sin(wd * t);
    traj.states.push_back({env * (init.i0 * c + sin_coeff * s), env * (dcos * c + dsin * s)});
  }
  return traj;
}

Trajectory evolve_spectral(const CircuitParams& p, const InitialData& init,
                           const std::vector<double>& times) {
  check_init(init);
  const BiorthogonalSystem sys = eigensystem(p);
  const auto b = expand(sys, init.state(p));

  Trajectory traj{times, {}, Method::kSpectral};
  traj.states.reserve(times.size());
  for (double t : times) {
    const Complex wp = b[kPlus] * std::exp(-kI * sys.lambda[kPlus] * t);
    const Complex wm = b[kMinus] * std::exp(-kI * sys.lambda[kMinus] * t);
    traj.states.push_back(wp * sys.phi[kPlus] + wm * sys.phi[kMinus]);
  }
  return traj;
}

Trajectory evolve_integrated(const CMat2& h, const CVec2& state0, const std::vector<double>& times,
                             double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidParameters("step must be > 0");
  const CMat2 m = -kI * h;  // dPhi/dt = m Phi

  Trajectory traj{times, {}, Method::kIntegrated};
  traj.states.reserve(times.size());
  if (times.empty()) return traj;
  CVec2 y = state0;
  traj.states.push_back(y);
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double span = times[k] - times[k - 1];
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(span / step - 1e-9)));
    const double dt = span / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const CVec2 k1 = m * y;
      const CVec2 k2 = m * (y + (0.5 * dt) * k1);
      const CVec2 k3 = m * (y + (0.5 * dt) * k2);
      const CVec2 k4 = m * (y + dt * k3);
      y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    traj.states.push_back(y);
  }
  return traj;
}

Trajectory evolve_integrated(const CircuitParams& p, const InitialData& init,
                             const std::vector<double>& times, double step) {
  check_init(init);
  return evolve_integrated(hamiltonian(p), init.state(p), times, step);
}

Trajectory evolve_expm(const CMat2& h, const CVec2& state0, const std::vector<double>& times) {
  const CMat2 m = -kI * h;
  Trajectory traj{times, {}, Method::kExpm};
  traj.states.reserve(times.size());
  for (double t : times) traj.states.push_back(expm(m, t) * state0);
  return traj;
}

Trajectory evolve_expm(const CircuitParams& p, const InitialData& init,
                       const std::vector<double>& times) {
  check_init(init);
  return evolve_expm(hamiltonian(p), init.state(p), times);
}

Comparison compare(const Trajectory& a, const Trajectory& b) {
  if (a.times.size() != b.times.size() || a.states.size() != a.times.size() ||
      b.states.size() != b.times.size())
    throw GridMismatch("trajectories have different lengths");
  Comparison out{0.0, a.times.empty() ? 0.0 : a.times.front()};
  for (std::size_t k = 0; k < a.times.size(); ++k) {
    if (std::abs(a.times[k] - b.times[k]) > 1e-12 * (1.0 + std::abs(a.times[k])))
      throw GridMismatch("trajectories are sampled on different time grids");
    const double e = norm(a.states[k] - b.states[k]);
    if (e > out.max_abs_error) out = {e, a.times[k]};
  }
  return out;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
  const auto old_precision = out.precision(17);
  const std::string_view tag = to_string(traj.method);
  out << "t,re_x1,im_x1,re_x2,im_x2,method\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const CVec2& s = traj.states[k];
    out << traj.times[k] << ',' << s[0].real() << ',' << s[0].imag() << ',' << s[1].real() << ','
        << s[1].imag() << ',' << tag << '\n';
  }
  out.precision(old_precision);
}

}  // namespace nhrlc
