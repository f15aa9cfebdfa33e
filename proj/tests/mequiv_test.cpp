#include "nhrlc/mequiv.hpp"
#include "nhrlc/metric.hpp"
#include "nhrlc/spectral.hpp"
#include "support.hpp"

namespace nhrlc {
namespace {

using test::kSqrt2;
using test::max_diff;
using test::Rng;

CircuitParams params(double alpha, double omega0) {
  return CircuitParams::from_alpha_omega0(alpha, omega0);
}

CMat2 invertible(Rng& rng) {
  for (;;) {
    const CMat2 p = rng.matrix2(2.0);
    if (std::abs(det(p)) > 0.1) return p;
  }
}

TEST(OdeCoefficients2, WorkedExample) {
  const OdeCoefficients c = ode_coefficients_2(hamiltonian(params(1.0 / kSqrt2, 1.0)));
  ASSERT_EQ(c.order, 2);
  ASSERT_EQ(c.coefficients.size(), 3u);
  EXPECT_EQ(c.coefficients[0], Complex(1.0));
  EXPECT_LT(std::abs(c.coefficients[1] - kSqrt2), 1e-15);
  EXPECT_LT(std::abs(c.coefficients[2] - 1.0), 1e-15);
}

TEST(OdeCoefficients2, GeneralCircuitAndGainCounterpart) {
  Rng rng(501);
  for (int k = 0; k < 50; ++k) {
    const CircuitParams p = params(rng.uniform(-3, 3), rng.uniform(0.1, 3));
    const OdeCoefficients c = ode_coefficients_2(hamiltonian(p));
    EXPECT_LT(std::abs(c.coefficients[1] - 2.0 * p.alpha()), 1e-14);
    EXPECT_LT(std::abs(c.coefficients[2] - p.omega0() * p.omega0()), 1e-14);
    const OdeCoefficients g = ode_coefficients_2(gain_hamiltonian(p));
    EXPECT_LT(std::abs(g.coefficients[1] + 2.0 * p.alpha()), 1e-14);
    EXPECT_LT(std::abs(g.coefficients[2] - p.omega0() * p.omega0()), 1e-14);
  }
}

TEST(MEquivalent, Examples) {
  EXPECT_TRUE(m_equivalent(CMat2::identity(), mat2(1.0, 1.0, 0.0, 1.0)));
  EXPECT_TRUE(m_equivalent(mat2(2.0, 3.0, 0.0, -1.0), mat2(1.0, 2.0, 1.0, 0.0)));
  EXPECT_FALSE(m_equivalent(mat2(2.0, 3.0, 0.0, 0.0), mat2(1.0, 2.0, 1.0, 0.0)));
}

TEST(MEquivalent, InvariantUnderSimilarity) {
  Rng rng(503);
  for (int k = 0; k < 200; ++k) {
    const CMat2 m = rng.matrix2(2.0);
    const CMat2 p = invertible(rng);
    const CMat2 moved = p * m * inverse(p);
    EXPECT_TRUE(m_equivalent(m, moved));
    EXPECT_TRUE(is_similar(m, moved));
  }
}

TEST(IsSimilar, Examples) {
  EXPECT_FALSE(is_similar(CMat2::identity(), mat2(1.0, 1.0, 0.0, 1.0)));
  EXPECT_TRUE(is_similar(CMat2::identity(), CMat2::identity()));
  const CircuitParams p = params(1.0 / kSqrt2, 1.0);
  const CMat2 h = similar_hamiltonian(metric_pair(eigensystem(p)), hamiltonian(p));
  EXPECT_TRUE(is_similar(hamiltonian(p), h));
  EXPECT_FALSE(is_similar(mat2(2.0, 3.0, 0.0, 0.0), mat2(1.0, 2.0, 1.0, 0.0)));
}

TEST(IsSimilar, ImpliesMEquivalenceOnRandomPairs) {
  Rng rng(505);
  for (int k = 0; k < 200; ++k) {
    const CMat2 a = rng.matrix2();
    const CMat2 b = rng.uniform(0, 1) < 0.5 ? rng.matrix2() : invertible(rng) * a * inverse(invertible(rng));
    if (is_similar(a, b)) EXPECT_TRUE(m_equivalent(a, b));
  }
}

TEST(MEquivalent, IntertwinersExistForEveryBeta) {
  const CMat2 hb = mat2(1.0, 2.0, 1.0, 0.0);
  for (double beta : {-1.0, 0.0, 5.0}) {
    const CMat2 ha = mat2(2.0, 3.0, 0.0, beta);
    EXPECT_EQ(m_equivalent(ha, hb), beta == -1.0);
    const IntertwinerSpace sp = solve_intertwiners(ha, hb);
    EXPECT_GE(sp.dimension(), 1u);
    const CMat2 x = mat2(1.0, 1.0, 0.0, 0.0);
    EXPECT_LT(max_diff(ha * x, x * hb), 1e-15);
  }
}

TEST(Liouville, AllZero) {
  const LiouvilleSystem sys = liouville({});
  CMat4 expected;
  expected(0, 2) = 1.0;
  expected(1, 3) = 1.0;
  EXPECT_EQ(sys.matrix, expected);
  EXPECT_EQ(sys.h_eff, kI * expected);
  const OdeCoefficients q = quartic_coefficients(sys);
  ASSERT_EQ(q.coefficients.size(), 5u);
  EXPECT_EQ(q.coefficients, (std::vector<Complex>{1.0, 0.0, 0.0, 0.0, 0.0}));
  EXPECT_TRUE(lemma_hypothesis(sys));
}

TEST(Liouville, CircuitForm) {
  const double a = 1.3, mu = 0.4, g = 0.7;
  const LiouvilleSystem sys = liouville(circu_form(a, mu, g));
  const std::array<Complex, 4> row2{-a, a * mu, g, 0.0};
  const std::array<Complex, 4> row3{a * mu, -a, 0.0, -g};
  for (std::size_t c = 0; c < 4; ++c) {
    EXPECT_EQ(sys.matrix(2, c), row2[c]);
    EXPECT_EQ(sys.matrix(3, c), row3[c]);
  }
}

TEST(Liouville, SpringBlockForm) {
  const double w2 = 2.5, kc = 0.6;
  LiouvilleCoefficients k;
  k.alpha2 = k.beta2 = w2;
  k.alpha3 = k.beta3 = kc;
  const LiouvilleSystem sys = liouville(k);
  // [[0, I], [M, 0]] with M = [[-w2, k], [k, -w2]].
  const CMat2 m = mat2(-w2, kc, kc, -w2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_EQ(sys.matrix(r, c), Complex(0.0));
      EXPECT_EQ(sys.matrix(r, c + 2), Complex(r == c ? 1.0 : 0.0));
      EXPECT_EQ(sys.matrix(r + 2, c), m(r, c));
      EXPECT_EQ(sys.matrix(r + 2, c + 2), Complex(0.0));
    }
  const OdeCoefficients q = quartic_coefficients(sys);
  EXPECT_EQ(q.coefficients[1], Complex(0.0));
  EXPECT_EQ(q.coefficients[2], Complex(2.0 * w2));
  EXPECT_EQ(q.coefficients[3], Complex(0.0));
  const Complex oracle = test::to_eigen(sys.matrix).determinant();
  EXPECT_LT(std::abs(q.coefficients[4] - oracle), 1e-12);
  EXPECT_LT(std::abs(q.coefficients[4] - (w2 * w2 - kc * kc)), 1e-12);
}

TEST(Quartic, IsTheCharacteristicPolynomial) {
  Rng rng(507);
  for (int n = 0; n < 200; ++n) {
    LiouvilleCoefficients k{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                            rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const LiouvilleSystem sys = liouville(k);
    const OdeCoefficients q = quartic_coefficients(sys);
    const auto cp = characteristic_polynomial(sys.matrix);
    for (std::size_t j = 0; j < 5; ++j) EXPECT_LT(std::abs(q.coefficients[j] - cp[j]), 1e-12);
    EXPECT_LT(std::abs(q.coefficients[4] - test::to_eigen(sys.matrix).determinant()), 1e-12);
  }
}

TEST(LemmaHypothesis, Examples) {
  EXPECT_TRUE(lemma_hypothesis(liouville(circu_form(2.0, 0.3, 2.0))));
  EXPECT_FALSE(lemma_hypothesis(liouville(circu_form(1.0, 0.3, 1.0))));
  const auto q = quartic_coefficients(liouville(circu_form(2.0, 0.3, 2.0)));
  EXPECT_EQ(q.coefficients[2], Complex(0.0));
  EXPECT_EQ(q.coefficients[3], Complex(0.0));
}

TEST(CheckLemma, QuarticSurvivesSimilarity) {
  Rng rng(509);
  const LiouvilleSystem sys = liouville(circu_form(2.0, 0.3, 2.0));
  for (int n = 0; n < 20; ++n) {
    CMat4 s = rng.matrix4() + 2.0 * CMat4::identity();
    const LemmaCheck c = check_lemma(sys, s);
    EXPECT_TRUE(c.hypothesis);
    EXPECT_LT(c.residual_reduced, 1e-10);
    EXPECT_LT(c.residual_transformed, 1e-10);
  }
  // Without the hypothesis only the full characteristic polynomial matches.
  const LemmaCheck off = check_lemma(liouville(circu_form(1.0, 0.3, 1.0)), rng.matrix4() + 2.0 * CMat4::identity());
  EXPECT_FALSE(off.hypothesis);
  EXPECT_LT(off.residual_transformed, 1e-10);
  EXPECT_GT(off.residual_reduced, 0.5);
}

}  // namespace
}  // namespace nhrlc
