#pragma once

#include <array>

#include "nhrlc/circuit.hpp"
#include "nhrlc/cxmat.hpp"
#include "nhrlc/metric.hpp"
#include "nhrlc/spectral.hpp"

namespace nhrlc {

/// Pseudo-fermion pair c = a12 [[a, 1], [-a^2, -a]], C = b12 [[b, 1], [-b^2, -b]]
/// together with the Hamiltonian data H_PF = omega C c + rho.
struct PseudoFermionPair {
  Complex a;
  Complex b;
  Complex a12;
  Complex b12;
  Complex gamma;  // a12 b12 (b - a)
  Complex omega;
  Complex rho;
  CMat2 c_op;
  CMat2 cc_op;  // C
};

/// Throws ExistenceViolation unless (a - b) gamma = 1 within 1e-10.
PseudoFermionPair pf_construct(Complex a, Complex b, Complex a12, Complex b12,
                               Complex omega = 1.0, Complex rho = 0.0);

enum class Branch { kPlus, kMinus };

/// The pair whose H_PF is hamiltonian(p). With a, b the roots of
/// x^2 - 2 alpha x + omega0^2: rho = -i a, omega = i (a - b), gamma = 1/(a - b).
/// kPlus takes a = alpha + sqrt(alpha^2 - omega0^2) (UP) or alpha + i sqrt(omega0^2 - alpha^2)
/// (BP); kMinus swaps a and b, which exchanges c and C.
/// c = |phi_lo><psi~_hi| and C = |phi_hi><psi~_lo|, where phi_lo has eigenvalue
/// rho, phi_hi has rho + omega and psi~ is the biorthogonal dual.
/// Throws ExistenceViolation inside the EP band (a == b).
PseudoFermionPair pf_identify(const CircuitParams& p, Branch branch);

/// [[omega gamma a + rho, omega gamma], [-omega gamma a b, -omega gamma b + rho]] = omega C c + rho.
CMat2 hpf_build(const PseudoFermionPair& pf);

/// H^S = omega c C + rho.
CMat2 susy_partner(const PseudoFermionPair& pf);

/// Residuals of the lowering/raising and number-operator relations.
/// "lo" is the eigenvector of H_PF with eigenvalue rho, "hi" the one with
/// rho + omega; psi_lo and psi_hi are their biorthogonal duals. Each entry is
/// ||X v - w|| / max(1, ||X|| ||v||).
struct LadderReport {
  double c_phi_lo;       // c phi_lo = 0
  double c_phi_hi;       // c phi_hi = phi_lo
  double cc_phi_lo;      // C phi_lo = phi_hi
  double cc_phi_hi;      // C phi_hi = 0
  double ccdag_psi_lo;   // C^dag psi_lo = 0
  double ccdag_psi_hi;   // C^dag psi_hi = psi_lo
  double cdag_psi_lo;    // c^dag psi_lo = psi_hi
  double cdag_psi_hi;    // c^dag psi_hi = 0
  double nphi_phi_lo;    // C c phi_lo = 0
  double nphi_phi_hi;    // C c phi_hi = phi_hi
  double npsi_psi_lo;    // c^dag C^dag psi_lo = 0
  double npsi_psi_hi;    // c^dag C^dag psi_hi = psi_hi

  std::array<double, 12> all() const;
  double max() const;
};

/// `sys` must come from the same circuit as `pf`; lo/hi are matched by eigenvalue.
LadderReport ladder_check(const PseudoFermionPair& pf, const BiorthogonalSystem& sys);

struct FermionizedSystem {
  CMat2 a_op;  // A = S_psi^1/2 c S_phi^1/2
  CVec2 e_plus;   // S_psi^1/2 phi_+
  CVec2 e_minus;  // S_psi^1/2 phi_-
  CMat2 h_fho;    // omega A^dag A + rho
  CMat2 h_susy;   // omega A A^dag + rho
  CMat2 sqrt_s_phi;
  CMat2 sqrt_s_psi;
};

/// Needs a positive pair (positive_metric_pair); throws NotPositiveHermitian
/// otherwise. H is recovered as S_phi^1/2 h_fho S_psi^1/2.
FermionizedSystem fermionize(const PseudoFermionPair& pf, const MetricPair& pair,
                             const BiorthogonalSystem& sys);

struct PtCheck {
  /// ||H PT v - PT H v|| for v = e1, e2, i e1, i e2, where PT v = P conj(v), P = [[0,1],[1,0]].
  std::array<double, 4> probe_residuals;
  bool is_pt_symmetric;
};

/// Flag set when every probe residual is below 1e-12 (1 + max |H_ij|).
PtCheck pt_check(const CMat2& h);

}  // namespace nhrlc
