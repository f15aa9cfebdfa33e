#include "nhrlc/metric.hpp"

#include <algorithm>

namespace nhrlc {

MetricPair positive_metric_pair(const BiorthogonalSystem& sys) {
  MetricPair m;
  m.kind = MetricKind::kS;
  m.s_phi = outer(sys.phi[kPlus], sys.phi[kPlus]) + outer(sys.phi[kMinus], sys.phi[kMinus]);
  m.s_psi = outer(sys.psi[kPlus], sys.psi[kPlus]) + outer(sys.psi[kMinus], sys.psi[kMinus]);
  return m;
}

MetricPair metric_pair(const BiorthogonalSystem& sys) {
  if (sys.phase != Phase::kUnbroken) return positive_metric_pair(sys);
  MetricPair m;
  m.kind = MetricKind::kT;
  m.s_phi = outer(sys.phi[kMinus], sys.phi[kPlus]) + outer(sys.phi[kPlus], sys.phi[kMinus]);
  m.s_psi = outer(sys.psi[kMinus], sys.psi[kPlus]) + outer(sys.psi[kPlus], sys.psi[kMinus]);
  return m;
}

CMat2 similar_hamiltonian(const MetricPair& pair, const CMat2& h_matrix) {
  return pair.s_psi * h_matrix * pair.s_phi;
}

CVec2 antilinear_u(const BiorthogonalSystem& sys, const CVec2& f) {
  return inner(f, sys.phi[kPlus]) * sys.psi[sys.dual(kPlus)] +
         inner(f, sys.phi[kMinus]) * sys.psi[sys.dual(kMinus)];
}

CVec2 isospectral_antilinear(const BiorthogonalSystem& sys, const CVec2& f) {
  return inner(f, sys.phi[kPlus]) * sys.psi[kPlus] + inner(f, sys.phi[kMinus]) * sys.psi[kMinus];
}

CMat2 sandwich(const AntilinearMap& outer_map, const CMat2& middle) {
  CMat2 out;
  const std::array<CVec2, 2> basis{CVec2{1.0, 0.0}, CVec2{0.0, 1.0}};
  for (std::size_t j = 0; j < 2; ++j) {
    const CVec2 col = outer_map(middle * outer_map(basis[j]));
    out(0, j) = col[0];
    out(1, j) = col[1];
  }
  return out;
}

CMat2 similar_hamiltonian_via_u(const BiorthogonalSystem& sys, const CMat2& h_dagger) {
  return sandwich([&sys](const CVec2& f) { return isospectral_antilinear(sys, f); }, h_dagger);
}

double IntertwinerReport::max() const {
  return std::max({residual_h_sphi, residual_spsi_h, residual_adjoint});
}

double IntertwinerReport::max_relative() const {
  return std::max({relative_h_sphi, relative_spsi_h, relative_adjoint});
}

IntertwinerReport verify_intertwining(const CMat2& h_matrix, const CMat2& h_similar,
                                      const MetricPair& pair) {
  const double nh = operator_norm(h_matrix);
  const double ns = operator_norm(h_similar);
  const double nphi = operator_norm(pair.s_phi);
  const double npsi = operator_norm(pair.s_psi);
  const auto relative = [](double r, double size) { return size > 0.0 ? r / size : r; };

  IntertwinerReport r;
  r.residual_h_sphi = operator_norm(h_matrix * pair.s_phi - pair.s_phi * h_similar);
  r.residual_spsi_h = operator_norm(pair.s_psi * h_matrix - h_similar * pair.s_psi);
  r.residual_adjoint =
      operator_norm(adjoint(h_matrix) * pair.s_psi - pair.s_psi * adjoint(h_similar));
  r.relative_h_sphi = relative(r.residual_h_sphi, nphi * (nh + ns));
  r.relative_spsi_h = relative(r.residual_spsi_h, npsi * (nh + ns));
  r.relative_adjoint = relative(r.residual_adjoint, npsi * (nh + ns));
  return r;
}

IntertwinerSpace solve_intertwiners(const CMat2& a, const CMat2& b, Orientation orientation) {
  // X A = B X  <=>  B X - X A = 0
  const CMat2& left = orientation == Orientation::kLeft ? a : b;
  const CMat2& right = orientation == Orientation::kLeft ? b : a;

  // Row-major vec(X): x[2i + j] = X(i, j).
  CMat4 k;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t row = 2 * i + j;
      for (std::size_t m = 0; m < 2; ++m) {
        k(row, 2 * m + j) += left(i, m);
        k(row, 2 * i + m) -= right(m, j);
      }
    }

  IntertwinerSpace space;
  for (const CVec4& v : nullspace(k, 1e-10)) space.basis.push_back(mat2(v[0], v[1], v[2], v[3]));
  return space;
}

}  // namespace nhrlc
