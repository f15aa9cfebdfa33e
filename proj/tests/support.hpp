#pragma once

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "nhrlc/circuit.hpp"
#include "nhrlc/cxmat.hpp"

namespace nhrlc::test {

inline const double kSqrt2 = std::sqrt(2.0);

inline Eigen::Matrix2cd to_eigen(const CMat2& m) {
  Eigen::Matrix2cd e;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) e(r, c) = m(r, c);
  return e;
}

inline Eigen::Matrix4cd to_eigen(const CMat4& m) {
  Eigen::Matrix4cd e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = m(r, c);
  return e;
}

inline CMat2 from_eigen(const Eigen::Matrix2cd& e) {
  return mat2(e(0, 0), e(0, 1), e(1, 0), e(1, 1));
}

inline CMat4 from_eigen(const Eigen::Matrix4cd& e) {
  CMat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = e(r, c);
  return m;
}

template <std::size_t N>
double max_diff(const CMat<N>& x, const CMat<N>& y) {
  return max_abs(x - y);
}

inline double max_diff(const CVec2& x, const CVec2& y) {
  return std::max(std::abs(x[0] - y[0]), std::abs(x[1] - y[1]));
}

/// Seeded generator so every property run is reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Complex complex(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }

  CMat2 matrix2(double r = 1.0) {
    CMat2 m;
    for (auto& z : m.a) z = complex(r);
    return m;
  }
  CMat4 matrix4(double r = 1.0) {
    CMat4 m;
    for (auto& z : m.a) z = complex(r);
    return m;
  }

  /// (alpha, omega0) in (0, 3)^2 inside the requested phase, away from the EP band.
  CircuitParams params(Phase phase) {
    for (;;) {
      const double a = uniform(0.0, 3.0);
      const double w = uniform(0.0, 3.0);
      if (!(w > 0.0)) continue;
      const CircuitParams p = CircuitParams::from_alpha_omega0(a, w);
      if (classify(p) == phase) return p;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nhrlc::test
