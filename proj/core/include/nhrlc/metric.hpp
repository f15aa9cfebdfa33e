#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "nhrlc/cxmat.hpp"
#include "nhrlc/spectral.hpp"

namespace nhrlc {

enum class MetricKind {
  kS,  // S_phi = sum_a |phi_a><phi_a|, S_psi = sum_a |psi_a><psi_a|; positive
  kT,  // T_phi = |phi_-><phi_+| + |phi_+><phi_-|, same for psi; maps psi_a -> phi_a in UP
};

/// A pair of mutually inverse operators mapping the psi basis onto the phi
/// basis and back.
struct MetricPair {
  CMat2 s_phi;
  CMat2 s_psi;
  MetricKind kind;
};

/// BP: the positive S pair. UP: the T pair, for which T_phi psi_a = phi_a.
/// The psi operator is |psi_-><psi_+| + |psi_+><psi_-| (the symmetric form;
/// repeating psi_- in both terms would make it rank one).
MetricPair metric_pair(const BiorthogonalSystem& sys);

/// The positive S pair in either phase. In UP it satisfies S_phi psi_a =
/// phi_dual(a) and is still S_psi^-1.
MetricPair positive_metric_pair(const BiorthogonalSystem& sys);

/// h = s_psi H s_phi, isospectral to H with h psi_a = lambda_a psi_a.
CMat2 similar_hamiltonian(const MetricPair& pair, const CMat2& h_matrix);

/// Antilinear map as a procedure. Never materialized as a matrix: that would
/// silently linearize it.
using AntilinearMap = std::function<CVec2(const CVec2&)>;

/// U f = sum_a <f, phi_a> psi_dual(a): the BP map in BP, the UP map
/// <f,phi_+> psi_- + <f,phi_-> psi_+ in UP. Fixes psi_+ and psi_- in both phases.
CVec2 antilinear_u(const BiorthogonalSystem& sys, const CVec2& f);

/// V f = sum_a <f, phi_a> psi_a. Coincides with antilinear_u in BP; in UP it
/// swaps psi_+ and psi_-, which is what makes V H^dagger V agree with
/// T_psi H T_phi.
CVec2 isospectral_antilinear(const BiorthogonalSystem& sys, const CVec2& f);

/// Matrix of the linear operator outer o middle o outer, from its action on e1, e2.
CMat2 sandwich(const AntilinearMap& outer, const CMat2& middle);

/// h built as V H^dagger V from antilinear applications. Equals
/// similar_hamiltonian(metric_pair(sys), H).
CMat2 similar_hamiltonian_via_u(const BiorthogonalSystem& sys, const CMat2& h_dagger);

struct IntertwinerReport {
  double residual_h_sphi;   // ||H S_phi - S_phi h||
  double residual_spsi_h;   // ||S_psi H - h S_psi||
  double residual_adjoint;  // ||H^dagger S_psi - S_psi h^dagger||

  /// The same residuals divided by the sum of the norms of the two products,
  /// e.g. ||H S_phi - S_phi h|| / (||H|| ||S_phi|| + ||S_phi|| ||h||). Near the EP
  /// the metrics blow up and only these stay at rounding level.
  double relative_h_sphi;
  double relative_spsi_h;
  double relative_adjoint;

  double max() const;
  double max_relative() const;
};

/// Operator-norm residuals of the three intertwining relations between H and h.
IntertwinerReport verify_intertwining(const CMat2& h_matrix, const CMat2& h_similar,
                                      const MetricPair& pair);

enum class Orientation {
  kLeft,   // A X = X B
  kRight,  // X A = B X
};

struct IntertwinerSpace {
  std::vector<CMat2> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Basis of {X : A X = X B} (or X A = B X), from the null space of the 4x4
/// map X -> A X - X B. Singular values below 1e-10 of the largest count as zero.
IntertwinerSpace solve_intertwiners(const CMat2& a, const CMat2& b,
                                    Orientation orientation = Orientation::kLeft);

}  // namespace nhrlc
