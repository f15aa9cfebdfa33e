#include <limits>

#include "nhrlc/errors.hpp"
#include "nhrlc/mequiv.hpp"
#include "support.hpp"

namespace nhrlc {
namespace {

using test::kSqrt2;
using test::max_diff;
using test::Rng;

CircuitParams params(double alpha, double omega0) {
  return CircuitParams::from_alpha_omega0(alpha, omega0);
}

TEST(CircuitParams, FromRlcDerivesAlphaAndOmega0) {
  const CircuitParams p = CircuitParams::from_rlc(kSqrt2, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(p.alpha(), 1.0 / kSqrt2);
  EXPECT_DOUBLE_EQ(p.omega0(), 1.0);
  ASSERT_TRUE(p.rlc().has_value());
  EXPECT_DOUBLE_EQ(p.rlc()->resistance, kSqrt2);
  const CircuitParams q = CircuitParams::from_rlc(2.0, 0.5, 8.0);
  EXPECT_DOUBLE_EQ(q.alpha(), 2.0);
  EXPECT_DOUBLE_EQ(q.omega0(), 0.5);
}

TEST(CircuitParams, NegativeResistanceIsAllowed) {
  EXPECT_DOUBLE_EQ(CircuitParams::from_rlc(-1.0, 1.0, 1.0).alpha(), -0.5);
}

TEST(CircuitParams, RejectsInvalidInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(CircuitParams::from_rlc(1.0, 0.0, 1.0), InvalidParameters);
  EXPECT_THROW(CircuitParams::from_rlc(1.0, 1.0, -1.0), InvalidParameters);
  EXPECT_THROW(CircuitParams::from_rlc(nan, 1.0, 1.0), InvalidParameters);
  EXPECT_THROW(CircuitParams::from_alpha_omega0(1.0, 0.0), InvalidParameters);
  EXPECT_THROW(CircuitParams::from_alpha_omega0(1.0, -2.0), InvalidParameters);
  EXPECT_THROW(CircuitParams::from_alpha_omega0(std::numeric_limits<double>::infinity(), 1.0),
               InvalidParameters);
  EXPECT_FALSE(CircuitParams::from_alpha_omega0(1.0, 2.0).rlc().has_value());
}

TEST(Hamiltonian, WorkedExample) {
  EXPECT_LT(max_diff(hamiltonian(params(1.0 / kSqrt2, 1.0)), kI * mat2(0.0, 1.0, -1.0, -kSqrt2)),
            1e-15);
}

TEST(Hamiltonian, LosslessCircuitIsHermitian) {
  const CMat2 h = hamiltonian(params(0.0, 1.0));
  EXPECT_LT(max_diff(h, mat2(0.0, kI, -kI, 0.0)), 1e-15);
  EXPECT_LT(max_diff(h, adjoint(h)), 1e-15);
}

TEST(Hamiltonian, OverdampedPointReproducesScalarOde) {
  const CircuitParams p = params(1.25, 0.75);
  const CMat2 h = hamiltonian(p);
  EXPECT_EQ(h, kI * mat2(0.0, 1.0, -9.0 / 16.0, -2.5));
  // Integrate i dPhi/dt = H Phi by RK4 and check x1'' + 2 alpha x1' + omega0^2 x1 = 0,
  // with x1'' taken from the integrated x2 by central differences.
  const CMat2 m = -kI * h;
  const double dt = 1e-3;
  std::vector<CVec2> ys{CVec2{1.0, -0.3}};
  for (int k = 0; k < 3000; ++k) {
    const CVec2& y = ys.back();
    const CVec2 k1 = m * y;
    const CVec2 k2 = m * (y + (0.5 * dt) * k1);
    const CVec2 k3 = m * (y + (0.5 * dt) * k2);
    const CVec2 k4 = m * (y + dt * k3);
    ys.push_back(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < ys.size(); ++k) {
    const Complex x1dd = (ys[k + 1][1] - ys[k - 1][1]) / (2.0 * dt);
    const Complex x1d = (ys[k + 1][0] - ys[k - 1][0]) / (2.0 * dt);
    // x2 tracks x1'.
    worst = std::max(worst, std::abs(x1d - ys[k][1]));
    worst = std::max(worst, std::abs(x1dd + 2.5 * ys[k][1] + 0.5625 * ys[k][0]));
  }
  EXPECT_LT(worst, 1e-5);  // central-difference truncation, O(dt^2)
}

TEST(GainHamiltonian, IsTheAdjoint) {
  const CircuitParams p = params(1.0 / kSqrt2, 1.0);
  EXPECT_LT(max_diff(gain_hamiltonian(p), kI * mat2(0.0, 1.0, -1.0, kSqrt2)), 1e-15);
  const CircuitParams lossless = params(0.0, 1.0);
  EXPECT_EQ(gain_hamiltonian(lossless), hamiltonian(lossless));
  const OdeCoefficients ode = ode_coefficients_2(gain_hamiltonian(p));
  EXPECT_NEAR(std::abs(ode.coefficients[1] + kSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ode.coefficients[2] - 1.0), 0.0, 1e-15);
}

TEST(HermitianSplit, HermitianInput) {
  const CMat2 h = mat2(1.0, Complex(2.0, 1.0), Complex(2.0, -1.0), -3.0);
  const HermitianSplit s = hermitian_split(h);
  EXPECT_EQ(s.hermitian, h);
  EXPECT_EQ(s.anti_hermitian, CMat2::zero());
  const HermitianSplit lc = hermitian_split(hamiltonian(params(0.0, 1.0)));
  EXPECT_EQ(lc.anti_hermitian, CMat2::zero());
}

TEST(HermitianSplit, AntiHermitianFlowSatisfiesItsScalarOde) {
  // With omega0 = 1 the second component of i d(eta)/dt = H_- eta obeys
  // eta2'' + 2 alpha eta2' = 0.
  const double alpha = 1.0 / kSqrt2;
  const CMat2 hm = hermitian_split(hamiltonian(params(alpha, 1.0))).anti_hermitian;
  const CMat2 m = -kI * hm;
  const double dt = 1e-3;
  std::vector<CVec2> ys{CVec2{0.4, 1.0}};
  for (int k = 0; k < 4000; ++k) ys.push_back(expm(m, dt) * ys.back());
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < ys.size(); ++k) {
    const Complex d2 = (ys[k + 1][1] - 2.0 * ys[k][1] + ys[k - 1][1]) / (dt * dt);
    const Complex d1 = (ys[k + 1][1] - ys[k - 1][1]) / (2.0 * dt);
    worst = std::max(worst, std::abs(d2 + 2.0 * alpha * d1));
  }
  EXPECT_LT(worst, 1e-5);
}

TEST(HermitianSplit, PropertiesOnRandomMatrices) {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const CMat2 h = rng.matrix2(4.0);
    const HermitianSplit s = hermitian_split(h);
    EXPECT_LT(max_diff(s.hermitian, adjoint(s.hermitian)), 1e-14);
    EXPECT_LT(max_diff(s.anti_hermitian, -1.0 * adjoint(s.anti_hermitian)), 1e-14);
    EXPECT_LT(max_diff(s.hermitian + s.anti_hermitian, h), 1e-15 * max_abs(h));
  }
}

TEST(Hamiltonian, InvariantsOnRandomDraws) {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const CircuitParams p = params(rng.uniform(-3.0, 3.0), rng.uniform(0.01, 3.0));
    const CMat2 h = hamiltonian(p);
    EXPECT_EQ(trace(h), Complex(0.0, -2.0 * p.alpha()));
    EXPECT_EQ(det(h), Complex(-p.omega0() * p.omega0()));
    EXPECT_LT(max_diff(h + gain_hamiltonian(p), 2.0 * hermitian_split(h).hermitian), 1e-15);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(params(1.0 / kSqrt2, 1.0)), Phase::kBroken);
  EXPECT_EQ(classify(params(1.25, 0.75)), Phase::kUnbroken);
  EXPECT_EQ(classify(params(2.0, 2.0)), Phase::kExceptional);
  EXPECT_EQ(classify(params(2.0 * (1 + 1e-13), 2.0)), Phase::kExceptional);
  EXPECT_EQ(classify(params(2.0 * (1 + 1e-11), 2.0)), Phase::kUnbroken);
  EXPECT_EQ(to_string(Phase::kUnbroken), "UP");
  EXPECT_EQ(to_string(Phase::kBroken), "BP");
  EXPECT_EQ(to_string(Phase::kExceptional), "EP");
}

TEST(Classify, InvariantUnderParameterPreservingRescaling) {
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const double r = rng.uniform(0.0, 5.0);
    const double l = rng.uniform(0.1, 3.0);
    const double c = rng.uniform(0.1, 3.0);
    const double s = rng.uniform(0.2, 5.0);
    const CircuitParams p = CircuitParams::from_rlc(r, l, c);
    // (kR, kL, C/k) keeps alpha and omega0.
    const CircuitParams q = CircuitParams::from_rlc(s * r, s * l, c / s);
    EXPECT_NEAR(q.alpha(), p.alpha(), 1e-12 * (1.0 + p.alpha()));
    EXPECT_NEAR(q.omega0(), p.omega0(), 1e-12 * p.omega0());
    if (std::abs(p.alpha() - p.omega0()) > 1e-9 * p.omega0()) EXPECT_EQ(classify(p), classify(q));
  }
}

}  // namespace
}  // namespace nhrlc
