#include "nhrlc/pseudofermion.hpp"

#include <algorithm>
#include <cmath>

#include "nhrlc/errors.hpp"

namespace nhrlc {

namespace {

CMat2 ladder_matrix(Complex coeff, Complex x) { return coeff * mat2(x, 1.0, -x * x, -x); }

double residual(const CMat2& op, const CVec2& v, const CVec2& target) {
  return norm(op * v - target) / std::max(1.0, operator_norm(op) * norm(v));
}

}  // namespace

PseudoFermionPair pf_construct(Complex a, Complex b, Complex a12, Complex b12, Complex omega,
                               Complex rho) {
  PseudoFermionPair pf;
  pf.a = a;
  pf.b = b;
  pf.a12 = a12;
  pf.b12 = b12;
  pf.gamma = a12 * b12 * (b - a);
  pf.omega = omega;
  pf.rho = rho;
  const Complex existence = (a - b) * pf.gamma;
  if (!(std::abs(existence - 1.0) < 1e-10))
    throw ExistenceViolation("(a - b) * gamma must equal 1 for a pseudo-fermion pair");
  pf.c_op = ladder_matrix(a12, a);
  pf.cc_op = ladder_matrix(b12, b);
  return pf;
}

PseudoFermionPair pf_identify(const CircuitParams& p, Branch branch) {
  if (classify(p) == Phase::kExceptional)
    throw ExistenceViolation("no pseudo-fermion representation at the exceptional point (a == b)");
  const BiorthogonalSystem sys = eigensystem(p);

  // The "+" branch puts the root with the larger real part (UP) or the
  // positive imaginary part (BP) into a. a = i lambda_lo.
  const std::size_t plus_lo = sys.phase == Phase::kUnbroken ? kMinus : kPlus;
  const std::size_t lo = branch == Branch::kPlus ? plus_lo : 1 - plus_lo;
  const std::size_t hi = 1 - lo;

  const Complex a = kI * sys.lambda[lo];
  const Complex b = kI * sys.lambda[hi];
  const CMat2 c = outer(sys.phi[lo], sys.psi[sys.dual(hi)]);
  const CMat2 cc = outer(sys.phi[hi], sys.psi[sys.dual(lo)]);
  return pf_construct(a, b, c(0, 0) / a, cc(0, 0) / b, sys.lambda[hi] - sys.lambda[lo],
                      sys.lambda[lo]);
}

CMat2 hpf_build(const PseudoFermionPair& pf) {
  const Complex wg = pf.omega * pf.gamma;
  return mat2(wg * pf.a + pf.rho, wg, -wg * pf.a * pf.b, -wg * pf.b + pf.rho);
}

CMat2 susy_partner(const PseudoFermionPair& pf) {
  return pf.omega * (pf.c_op * pf.cc_op) + pf.rho * CMat2::identity();
}

std::array<double, 12> LadderReport::all() const {
  return {c_phi_lo,     c_phi_hi,     cc_phi_lo,   cc_phi_hi,   ccdag_psi_lo, ccdag_psi_hi,
          cdag_psi_lo,  cdag_psi_hi,  nphi_phi_lo, nphi_phi_hi, npsi_psi_lo,  npsi_psi_hi};
}

double LadderReport::max() const {
  const auto v = all();
  return *std::max_element(v.begin(), v.end());
}

LadderReport ladder_check(const PseudoFermionPair& pf, const BiorthogonalSystem& sys) {
  const std::size_t lo =
      std::abs(sys.lambda[kPlus] - pf.rho) <= std::abs(sys.lambda[kMinus] - pf.rho) ? kPlus
                                                                                    : kMinus;
  const std::size_t hi = 1 - lo;
  const CVec2& phi_lo = sys.phi[lo];
  const CVec2& phi_hi = sys.phi[hi];
  const CVec2& psi_lo = sys.psi[sys.dual(lo)];
  const CVec2& psi_hi = sys.psi[sys.dual(hi)];
  const CVec2 zero{};

  const CMat2& c = pf.c_op;
  const CMat2& cc = pf.cc_op;
  const CMat2 c_dag = adjoint(c);
  const CMat2 cc_dag = adjoint(cc);
  const CMat2 n_phi = cc * c;
  const CMat2 n_psi = c_dag * cc_dag;

  LadderReport r;
  r.c_phi_lo = residual(c, phi_lo, zero);
  r.c_phi_hi = residual(c, phi_hi, phi_lo);
  r.cc_phi_lo = residual(cc, phi_lo, phi_hi);
  r.cc_phi_hi = residual(cc, phi_hi, zero);
  r.ccdag_psi_lo = residual(cc_dag, psi_lo, zero);
  r.ccdag_psi_hi = residual(cc_dag, psi_hi, psi_lo);
  r.cdag_psi_lo = residual(c_dag, psi_lo, psi_hi);
  r.cdag_psi_hi = residual(c_dag, psi_hi, zero);
  r.nphi_phi_lo = residual(n_phi, phi_lo, zero);
  r.nphi_phi_hi = residual(n_phi, phi_hi, phi_hi);
  r.npsi_psi_lo = residual(n_psi, psi_lo, zero);
  r.npsi_psi_hi = residual(n_psi, psi_hi, psi_hi);
  return r;
}

FermionizedSystem fermionize(const PseudoFermionPair& pf, const MetricPair& pair,
                             const BiorthogonalSystem& sys) {
  FermionizedSystem f;
  f.sqrt_s_phi = sqrt_pos_hermitian(pair.s_phi);
  f.sqrt_s_psi = sqrt_pos_hermitian(pair.s_psi);
  f.a_op = f.sqrt_s_psi * pf.c_op * f.sqrt_s_phi;
  f.e_plus = f.sqrt_s_psi * sys.phi[kPlus];
  f.e_minus = f.sqrt_s_psi * sys.phi[kMinus];
  const CMat2 a_dag = adjoint(f.a_op);
  const CMat2 rho = pf.rho * CMat2::identity();
  f.h_fho = pf.omega * (a_dag * f.a_op) + rho;
  f.h_susy = pf.omega * (f.a_op * a_dag) + rho;
  return f;
}

PtCheck pt_check(const CMat2& h) {
  const CMat2 parity = mat2(0.0, 1.0, 1.0, 0.0);
  const auto pt = [&parity](const CVec2& v) { return parity * conj(v); };
  const std::array<CVec2, 4> probes{CVec2{1.0, 0.0}, CVec2{0.0, 1.0}, CVec2{kI, 0.0},
                                    CVec2{0.0, kI}};
  const double tol = 1e-12 * (1.0 + max_abs(h));
  PtCheck out;
  out.is_pt_symmetric = true;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    out.probe_residuals[k] = norm(h * pt(probes[k]) - pt(h * probes[k]));
    if (!(out.probe_residuals[k] < tol)) out.is_pt_symmetric = false;
  }
  return out;
}

}  // namespace nhrlc
