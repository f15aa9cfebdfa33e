#include "nhrlc/mequiv.hpp"

#include <algorithm>
#include <cmath>

namespace nhrlc {

namespace {

constexpr double kTol = 1e-12;

double scale_of(const CMat2& ma, const CMat2& mb) {
  return 1.0 + std::max(max_abs(ma), max_abs(mb));
}

bool is_scalar(const CMat2& m, double scale) {
  return std::abs(m(0, 1)) < kTol * scale && std::abs(m(1, 0)) < kTol * scale &&
         std::abs(m(0, 0) - m(1, 1)) < kTol * scale;
}

}  // namespace

OdeCoefficients ode_coefficients_2(const CMat2& m) {
  return {2, {1.0, kI * trace(m), -det(m)}};
}

bool m_equivalent(const CMat2& ma, const CMat2& mb) {
  const double scale = scale_of(ma, mb);
  return std::abs(trace(ma) - trace(mb)) < kTol * scale &&
         std::abs(det(ma) - det(mb)) < kTol * scale * scale;
}

bool is_similar(const CMat2& ma, const CMat2& mb) {
  const double scale = scale_of(ma, mb);
  return m_equivalent(ma, mb) && is_scalar(ma, scale) == is_scalar(mb, scale);
}

LiouvilleCoefficients circu_form(double alpha, double mu, double gamma) {
  LiouvilleCoefficients k;
  k.alpha2 = k.beta2 = alpha;
  k.alpha3 = k.beta3 = alpha * mu;
  k.alpha1 = -gamma;
  k.beta1 = gamma;
  return k;
}

LiouvilleSystem liouville(const LiouvilleCoefficients& k) {
  LiouvilleSystem sys;
  sys.coeffs = k;
  CMat4& l = sys.matrix;
  l(0, 2) = 1.0;
  l(1, 3) = 1.0;
  l(2, 0) = -k.alpha2;
  l(2, 1) = k.alpha3;
  l(2, 2) = -k.alpha1;
  l(3, 0) = k.beta3;
  l(3, 1) = -k.beta2;
  l(3, 3) = -k.beta1;
  sys.h_eff = kI * l;
  return sys;
}

OdeCoefficients quartic_coefficients(const LiouvilleSystem& sys) {
  const LiouvilleCoefficients& k = sys.coeffs;
  return {4,
          {1.0, -trace(sys.matrix), k.alpha2 + k.beta2 + k.alpha1 * k.beta1,
           k.alpha1 * k.beta2 + k.alpha2 * k.beta1, det(sys.matrix)}};
}

bool lemma_hypothesis(const LiouvilleSystem& sys) {
  const LiouvilleCoefficients& k = sys.coeffs;
  return std::abs(k.alpha2 + k.beta2 + k.alpha1 * k.beta1) < kTol &&
         std::abs(k.alpha1 * k.beta2 + k.alpha2 * k.beta1) < kTol;
}

LemmaCheck check_lemma(const LiouvilleSystem& sys, const CMat4& s) {
  LemmaCheck out;
  out.hypothesis = lemma_hypothesis(sys);
  out.original = quartic_coefficients(sys);
  const CMat4 moved = s * sys.matrix * inverse(s);
  out.transformed = characteristic_polynomial(moved);
  out.reduced = {1.0, -trace(moved), 0.0, 0.0, det(moved)};
  out.residual_transformed = 0.0;
  out.residual_reduced = 0.0;
  for (std::size_t k = 0; k < 5; ++k) {
    out.residual_transformed =
        std::max(out.residual_transformed, std::abs(out.original.coefficients[k] - out.transformed[k]));
    out.residual_reduced =
        std::max(out.residual_reduced, std::abs(out.original.coefficients[k] - out.reduced[k]));
  }
  return out;
}

}  // namespace nhrlc
