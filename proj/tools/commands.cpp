#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "nhrlc/dynamics.hpp"
#include "nhrlc/errors.hpp"
#include "nhrlc/mequiv.hpp"
#include "nhrlc/metric.hpp"
#include "nhrlc/pseudofermion.hpp"
#include "nhrlc/spectral.hpp"

namespace nhrlc::cli {

namespace {

constexpr double kReportTMax = 10.0;
constexpr double kReportDt = 0.05;
constexpr double kReportStep = 1e-3;

double max_state_norm(const Trajectory& t) {
  double m = 0.0;
  for (const CVec2& s : t.states) m = std::max(m, norm(s));
  return m;
}

struct PairError {
  std::string name;
  Comparison abs;
  double relative;
};

/// Every pair of trajectories, errors relative to 1 + the largest state norm.
std::vector<PairError> pairwise(const std::vector<Trajectory>& trajs) {
  std::vector<PairError> out;
  for (std::size_t i = 0; i < trajs.size(); ++i)
    for (std::size_t j = i + 1; j < trajs.size(); ++j) {
      const Comparison c = compare(trajs[i], trajs[j]);
      const double scale = 1.0 + std::max(max_state_norm(trajs[i]), max_state_norm(trajs[j]));
      out.push_back({std::string(to_string(trajs[i].method)) + "/" + std::string(to_string(trajs[j].method)),
                     c, c.max_abs_error / scale});
    }
  return out;
}

double pair_tolerance(const std::string& name) {
  return name.find("integrated") != std::string::npos ? Tolerances::kIntegrator : Tolerances::kExactMethods;
}

/// The exact reference trajectories available in the phase of `p`; the
/// matrix exponential alone where the other routes are unsupported.
std::vector<Trajectory> exact_trajectories(const CircuitParams& p, const InitialData& init,
                                           const std::vector<double>& times) {
  try {
    switch (classify(p)) {
      case Phase::kBroken:
        return {evolve_closed_form(p, init, times), evolve_spectral(p, init, times)};
      case Phase::kUnbroken:
        return {evolve_spectral(p, init, times), evolve_expm(p, init, times)};
      case Phase::kExceptional:
        break;
    }
  } catch (const PhaseUnsupported&) {
  }
  return {evolve_expm(p, init, times)};
}

SpectralBlock spectral_block(const BiorthogonalSystem& sys) {
  SpectralBlock b;
  for (std::size_t a : {kPlus, kMinus}) {
    b.eigenvalues.push_back(sys.lambda[a]);
    b.normalization_products.push_back(std::conj(sys.n_phi[a]) * sys.n_psi[sys.dual(a)]);
    for (std::size_t c : {kPlus, kMinus}) {
      const double expected = c == sys.dual(a) ? 1.0 : 0.0;
      b.biorthogonality_residual =
          std::max(b.biorthogonality_residual, std::abs(inner(sys.phi[a], sys.psi[c]) - expected));
    }
  }
  return b;
}

MetricBlock metric_block(const BiorthogonalSystem& sys, const CMat2& h) {
  const MetricPair pair = metric_pair(sys);
  MetricBlock b;
  b.kind = pair.kind == MetricKind::kS ? "S" : "T";
  b.s_phi = pair.s_phi;
  b.s_psi = pair.s_psi;
  b.h = similar_hamiltonian(pair, h);
  b.inverse_residual = operator_norm(pair.s_phi * pair.s_psi - CMat2::identity()) /
                       (operator_norm(pair.s_phi) * operator_norm(pair.s_psi));
  const IntertwinerReport ir = verify_intertwining(h, b.h, pair);
  b.residual_h_sphi = ir.relative_h_sphi;
  b.residual_spsi_h = ir.relative_spsi_h;
  b.residual_adjoint = ir.relative_adjoint;
  return b;
}

PseudofermionValues pseudofermion_values(const CircuitParams& p, const BiorthogonalSystem& sys,
                                         const CMat2& h) {
  PseudofermionValues v;
  for (Branch branch : {Branch::kPlus, Branch::kMinus}) {
    const PseudoFermionPair pf = pf_identify(p, branch);
    if (branch == Branch::kPlus) {
      v.a = pf.a;
      v.b = pf.b;
      v.gamma = pf.gamma;
      v.omega = pf.omega;
      v.rho = pf.rho;
    }
    const double nc = operator_norm(pf.c_op);
    const double ncc = operator_norm(pf.cc_op);
    const double anti =
        operator_norm(anticommutator(pf.c_op, pf.cc_op) - CMat2::identity()) / (1.0 + nc * ncc);
    const double nil = std::max(operator_norm(pf.c_op * pf.c_op) / (1.0 + nc * nc),
                                operator_norm(pf.cc_op * pf.cc_op) / (1.0 + ncc * ncc));
    v.anticommutator_residual = std::max(v.anticommutator_residual, anti);
    v.nilpotency_residual = std::max(v.nilpotency_residual, nil);
    v.hamiltonian_residual =
        std::max(v.hamiltonian_residual, operator_norm(hpf_build(pf) - h) / (1.0 + operator_norm(h)));
    v.ladder_residual = std::max(v.ladder_residual, ladder_check(pf, sys).max());
  }
  return v;
}

DynamicsBlock dynamics_block(const CircuitParams& p) {
  DynamicsBlock b{kReportTMax, kReportDt, kReportStep, {}};
  const double inductance = p.rlc() ? p.rlc()->inductance : 1.0;
  const InitialData init{1.0, 0.0, inductance};
  const std::vector<double> times = uniform_grid(kReportTMax, kReportDt);
  std::vector<Trajectory> trajs = exact_trajectories(p, init, times);
  trajs.push_back(evolve_integrated(p, init, times, kReportStep));
  for (const PairError& e : pairwise(trajs)) b.errors[e.name] = e.relative;
  return b;
}

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

/// CSV of several trajectories under a single header.
void write_trajectories(std::ostream& out, const std::vector<Trajectory>& trajs) {
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    std::ostringstream buf;
    write_csv(buf, trajs[i]);
    std::string text = buf.str();
    if (i > 0) text.erase(0, text.find('\n') + 1);
    out << text;
  }
}

CMat2 matrix_from_reals(const std::vector<double>& v, const char* flag) {
  if (v.size() != 8) throw InvalidParameters(std::string(flag) + " needs 8 reals (re/im pairs, row-major)");
  CMat2 m;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!std::isfinite(v[2 * k]) || !std::isfinite(v[2 * k + 1]))
      throw InvalidParameters(std::string(flag) + " entries must be finite");
    m.a[k] = {v[2 * k], v[2 * k + 1]};
  }
  return m;
}

}  // namespace

CircuitParams resolve_params(const AnalyzeOptions& o) {
  const bool any_natural = o.alpha || o.omega0;
  const bool any_rlc = o.resistance || o.inductance || o.capacitance;
  if (any_natural && any_rlc)
    throw InvalidParameters("give either --alpha/--omega0 or --R/--L/--C, not both");
  if (any_natural) {
    if (!o.alpha || !o.omega0) throw InvalidParameters("--alpha and --omega0 must be given together");
    return CircuitParams::from_alpha_omega0(*o.alpha, *o.omega0);
  }
  if (any_rlc) {
    if (!o.resistance || !o.inductance || !o.capacitance)
      throw InvalidParameters("--R, --L and --C must be given together");
    return CircuitParams::from_rlc(*o.resistance, *o.inductance, *o.capacitance);
  }
  throw InvalidParameters("missing circuit parameters: give --alpha/--omega0 or --R/--L/--C");
}

Report analyze(const CircuitParams& p) {
  Report r;
  const Phase phase = classify(p);
  r.input.alpha = p.alpha();
  r.input.omega0 = p.omega0();
  r.input.phase = std::string(to_string(phase));
  if (p.rlc()) {
    r.input.resistance = p.rlc()->resistance;
    r.input.inductance = p.rlc()->inductance;
    r.input.capacitance = p.rlc()->capacitance;
  }

  const CMat2 h = hamiltonian(p);
  const TraceDet td = trace_det(h);
  r.equivalence = {td.trace, td.det};

  PseudofermionBlock pf;
  pf.pt_symmetric = pt_check(h).is_pt_symmetric;

  if (phase == Phase::kExceptional) {
    const EpSystem ep = ep_system(p);
    SpectralBlock s;
    s.ep = EpBlock{ep.lambda_ep, ep.phi_ep, ep.psi_ep, ep.self_orthogonality_residual()};
    r.spectral = s;
    try {
      pf_identify(p, Branch::kPlus);
    } catch (const ExistenceViolation& e) {
      pf.existence_violation = e.what();
    }
    r.notes.push_back("metric operators need a diagonalizable H and are omitted at the exceptional point");
  } else {
    try {
      const BiorthogonalSystem sys = eigensystem(p);
      r.spectral = spectral_block(sys);
      r.metric = metric_block(sys, h);
      pf.values = pseudofermion_values(p, sys, h);
    } catch (const PhaseUnsupported& e) {
      r.notes.push_back(std::string("spectral, metric and pseudo-fermion blocks omitted: ") + e.what());
    }
  }
  r.pseudofermion = pf;
  r.dynamics = dynamics_block(p);
  return r;
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  CircuitParams p = CircuitParams::from_alpha_omega0(0.0, 1.0);
  try {
    p = resolve_params(opts);
  } catch (const InvalidParameters& e) {
    err << "nhrlc analyze: " << e.what() << '\n';
    return kExitBadParameters;
  }
  const Report r = analyze(p);
  write_json(out, r);
  const std::vector<std::string> bad = tolerance_violations(r);
  if (bad.empty()) return kExitOk;
  err << "nhrlc analyze: residuals above tolerance:";
  for (const std::string& name : bad) err << ' ' << name;
  err << '\n';
  return kExitToleranceViolation;
}

std::vector<SweepRow> sweep(const SweepOptions& o) {
  if (!std::isfinite(o.alpha_min) || !std::isfinite(o.alpha_max) || !(o.alpha_min < o.alpha_max))
    throw InvalidParameters("sweep needs finite --alpha-min < --alpha-max");
  if (o.steps < 2) throw InvalidParameters("sweep needs --steps >= 2");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(o.steps));
  for (int k = 0; k < o.steps; ++k) {
    const double alpha = o.alpha_min + (o.alpha_max - o.alpha_min) * k / (o.steps - 1);
    const CircuitParams p = CircuitParams::from_alpha_omega0(alpha, o.omega0);
    const Phase phase = classify(p);
    std::array<Complex, 2> lam;
    if (phase == Phase::kExceptional) {
      const Complex l = ep_system(p).lambda_ep;
      lam = {l, l};
    } else {
      try {
        const BiorthogonalSystem sys = eigensystem(p);
        lam = {sys.lambda[kPlus], sys.lambda[kMinus]};
      } catch (const PhaseUnsupported&) {
        lam = eig2(hamiltonian(p)).values;
      }
    }
    if (!rows.empty()) {
      const SweepRow& prev = rows.back();
      const double keep = std::abs(lam[0] - prev.lambda_plus) + std::abs(lam[1] - prev.lambda_minus);
      const double swap = std::abs(lam[1] - prev.lambda_plus) + std::abs(lam[0] - prev.lambda_minus);
      if (swap < keep) std::swap(lam[0], lam[1]);
    }
    rows.push_back({alpha, lam[0], lam[1], phase});
  }
  return rows;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    rows = sweep(opts);
  } catch (const InvalidParameters& e) {
    err << "nhrlc sweep: " << e.what() << '\n';
    return kExitBadParameters;
  }
  out << std::setprecision(17);
  out << "alpha,re_lambda_plus,im_lambda_plus,re_lambda_minus,im_lambda_minus,phase\n";
  // Adding +0.0 turns -0 into 0.
  for (const SweepRow& r : rows)
    out << r.alpha + 0.0 << ',' << r.lambda_plus.real() + 0.0 << ',' << r.lambda_plus.imag() + 0.0 << ','
        << r.lambda_minus.real() + 0.0 << ',' << r.lambda_minus.imag() + 0.0 << ',' << to_string(r.phase)
        << '\n';
  return kExitOk;
}

int cmd_evolve(const EvolveOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<Trajectory> trajs;
  try {
    const CircuitParams p = CircuitParams::from_alpha_omega0(o.alpha, o.omega0);
    if (!(o.inductance > 0.0) || !std::isfinite(o.inductance))
      throw InvalidParameters("--L must be positive");
    if (!std::isfinite(o.i0) || !std::isfinite(o.v0)) throw InvalidParameters("--i0 and --v0 must be finite");
    const InitialData init{o.i0, o.v0, o.inductance};
    const std::vector<double> times = uniform_grid(o.t_max, o.dt);
    const Phase phase = classify(p);
    if (o.method == "closed") {
      trajs.push_back(evolve_closed_form(p, init, times));
    } else if (o.method == "spectral") {
      if (phase == Phase::kExceptional) {
        err << "spectral evolution is undefined at the exceptional point; using the matrix exponential\n";
        trajs.push_back(evolve_expm(p, init, times));
      } else {
        trajs.push_back(evolve_spectral(p, init, times));
      }
    } else if (o.method == "rk") {
      trajs.push_back(evolve_integrated(p, init, times, o.step));
    } else if (o.method == "all") {
      trajs = exact_trajectories(p, init, times);
      trajs.push_back(evolve_integrated(p, init, times, o.step));
    } else {
      throw InvalidParameters("--method must be one of all, closed, spectral, rk");
    }
  } catch (const InvalidParameters& e) {
    err << "nhrlc evolve: " << e.what() << '\n';
    return kExitBadParameters;
  } catch (const PhaseUnsupported& e) {
    err << "nhrlc evolve: " << e.what() << '\n';
    return kExitBadParameters;
  }

  write_trajectories(out, trajs);
  err << std::setprecision(6);
  err << "samples " << trajs.front().times.size() << '\n';
  if (trajs.size() < 2) return kExitOk;

  bool ok = true;
  double worst = 0.0;
  for (const PairError& e : pairwise(trajs)) {
    err << e.name << " max_abs_error " << e.abs.max_abs_error << " at t=" << e.abs.at_time << " relative "
        << e.relative << '\n';
    worst = std::max(worst, e.abs.max_abs_error);
    if (!(e.relative < pair_tolerance(e.name))) ok = false;
  }
  err << "max_error " << worst << '\n';
  return ok ? kExitOk : kExitToleranceViolation;
}

int cmd_mequiv(const MequivOptions& o, std::ostream& out, std::ostream& err) {
  CMat2 a, b;
  try {
    a = matrix_from_reals(o.matrix_a, "--matrix-a");
    b = matrix_from_reals(o.matrix_b, "--matrix-b");
  } catch (const InvalidParameters& e) {
    err << "nhrlc mequiv: " << e.what() << '\n';
    return kExitBadParameters;
  }
  const nlohmann::json j = {{"m_equivalent", m_equivalent(a, b)},
                            {"similar", is_similar(a, b)},
                            {"intertwiner_dim", solve_intertwiners(a, b).dimension()}};
  write_json(out, j);
  return kExitOk;
}

}  // namespace nhrlc::cli
