#pragma once

#include <array>
#include <vector>

#include "nhrlc/cxmat.hpp"

namespace nhrlc {

/// Scalar ODE coefficients, highest order first, leading entry 1.
struct OdeCoefficients {
  int order;
  std::vector<Complex> coefficients;
};

/// For i dv/dt = M v with v2 = dv1/dt: v1'' + i tr(M) v1' - det(M) v1 = 0.
OdeCoefficients ode_coefficients_2(const CMat2& m);

/// Same trace and determinant within 1e-12 scale (resp. scale^2), where
/// scale = 1 + the largest entry modulus of either matrix.
bool m_equivalent(const CMat2& ma, const CMat2& mb);

/// 2x2 similarity: equal characteristic polynomials and equal minimal
/// polynomials. The latter differ only when exactly one matrix is scalar.
bool is_similar(const CMat2& ma, const CMat2& mb);

/// Coefficients of the coupled pair
///   x1'' + alpha1 x1' + alpha2 x1 - alpha3 x2 = 0
///   x2'' + beta1 x2' + beta2 x2 - beta3 x1 = 0
struct LiouvilleCoefficients {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
};

/// alpha2 = beta2 = alpha, alpha3 = beta3 = alpha mu, alpha1 = -gamma, beta1 = gamma.
LiouvilleCoefficients circu_form(double alpha, double mu, double gamma);

struct LiouvilleSystem {
  LiouvilleCoefficients coeffs;
  CMat4 matrix;  // L, with d/dt (x1, x2, x1', x2') = L (x1, x2, x1', x2')
  CMat4 h_eff;   // i L
};

LiouvilleSystem liouville(const LiouvilleCoefficients& k);

/// [1, -tr L, alpha2 + beta2 + alpha1 beta1, alpha1 beta2 + alpha2 beta1, det L]:
/// the fourth-order equation obeyed by x1.
OdeCoefficients quartic_coefficients(const LiouvilleSystem& sys);

/// alpha2 + beta2 + alpha1 beta1 = 0 and alpha1 beta2 + alpha2 beta1 = 0, within 1e-12.
bool lemma_hypothesis(const LiouvilleSystem& sys);

struct LemmaCheck {
  bool hypothesis;
  OdeCoefficients original;  // quartic_coefficients(sys)
  /// x1 equation of the transformed system S L S^-1: its characteristic polynomial.
  std::array<Complex, 5> transformed;
  /// [1, -tr, 0, 0, det] of S L S^-1: what the equation reduces to under the hypothesis.
  std::array<Complex, 5> reduced;
  double residual_transformed;  // max_k |original_k - transformed_k|
  double residual_reduced;      // max_k |original_k - reduced_k|
};

/// Compares the quartic of L with the one of S L S^-1. Throws Error if S is singular.
LemmaCheck check_lemma(const LiouvilleSystem& sys, const CMat4& s);

}  // namespace nhrlc
