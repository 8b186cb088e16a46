#include <gtest/gtest.h>

#include <random>

#include "cgq/hankel.hpp"
#include "cgq/polynomial.hpp"

namespace cgq {
namespace {

Polynomial poly(std::initializer_list<double> c) {
  std::vector<BigReal> v;
  for (double x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

std::vector<Polynomial> monic_for(const WeightSpec& spec, std::size_t n, Precision p) {
  const auto rc = recursion_coeffs(moment_sequence(spec, 2 * n - 1, p), n);
  return monic_sequence(rc, n);
}

TEST(MonicSequence, LegendreSecondDegree) {
  const Precision p{128};
  const auto pis = monic_for(WeightSpec::legendre(), 2, p);
  ASSERT_EQ(pis.size(), 3u);
  EXPECT_EQ(pis[0].degree(), 0);
  EXPECT_EQ(pis[0][0], BigReal(1));
  WorkingPrecision scope(p);
  const auto& p2 = pis[2];
  ASSERT_EQ(p2.degree(), 2);
  EXPECT_LE(abs(p2[0] + BigReal(1) / BigReal(3)), pow2(-(p.bits - 4)));
  EXPECT_LE(abs(p2[1]), pow2(-(p.bits - 4)));
  EXPECT_EQ(p2[2], BigReal(1));
}

TEST(MonicSequence, HermiteSecondDegree) {
  const Precision p{128};
  const auto pis = monic_for(WeightSpec::hermite(), 2, p);
  WorkingPrecision scope(p);
  const auto& p2 = pis[2];
  EXPECT_LE(abs(p2[0] + BigReal(0.5)), pow2(-(p.bits - 4)));
  EXPECT_LE(abs(p2[1]), pow2(-(p.bits - 4)));
  EXPECT_EQ(p2[2], BigReal(1));
}

TEST(MonicSequence, DegreeZeroOnly) {
  const auto rc = recursion_coeffs(moment_sequence(WeightSpec::legendre(), 1, Precision{64}), 1);
  const auto pis = monic_sequence(rc, 0);
  ASSERT_EQ(pis.size(), 1u);
  EXPECT_EQ(pis[0].degree(), 0);
  EXPECT_EQ(pis[0][0], BigReal(1));
}

TEST(Eval, HornerExamples) {
  WorkingPrecision scope(Precision{100});
  const auto p = poly({-1, 0, 1});
  EXPECT_TRUE(eval(p, BigReal(1)).is_zero());
  EXPECT_EQ(eval(p, BigReal(3)), BigReal(8));
  EXPECT_EQ(eval(p, BigReal(-0.5)), BigReal(-0.75));
  EXPECT_TRUE(eval(Polynomial{}, BigReal(2)).is_zero());
  EXPECT_EQ(eval(poly({7}), BigReal(1e6)), BigReal(7));
}

TEST(PolyMul, Examples) {
  WorkingPrecision scope(Precision{100});
  const auto prod = poly_mul(poly({1, 1}), poly({-1, 1}));
  ASSERT_EQ(prod.degree(), 2);
  EXPECT_EQ(prod[0], BigReal(-1));
  EXPECT_TRUE(prod[1].is_zero());
  EXPECT_EQ(prod[2], BigReal(1));
  EXPECT_EQ(poly_mul(poly({2}), poly({0, 3})).degree(), 1);
  EXPECT_EQ(poly_mul(Polynomial{}, poly({1, 2})).degree(), -1);
}

TEST(Derivative, Examples) {
  WorkingPrecision scope(Precision{100});
  const auto d = derivative(poly({5, -2, 0, 4}));
  ASSERT_EQ(d.degree(), 2);
  EXPECT_EQ(d[0], BigReal(-2));
  EXPECT_TRUE(d[1].is_zero());
  EXPECT_EQ(d[2], BigReal(12));
  EXPECT_EQ(derivative(poly({3})).degree(), -1);
}

TEST(Integrate, AgainstLegendreMoments) {
  const Precision p{128};
  const auto mu = moment_sequence(WeightSpec::legendre(), 4, p);
  WorkingPrecision scope(p);
  // ∫_{-1}^{1} (1 + x + x^4) dx = 2 + 2/5
  const BigReal v = integrate(poly({1, 1, 0, 0, 1}), mu);
  EXPECT_LE(abs(v - BigReal(12) / BigReal(5)), pow2(-(p.bits - 4)));
  EXPECT_THROW(integrate(poly({0, 0, 0, 0, 0, 1}), mu), std::exception);
}

TEST(MonicSequenceProperty, OrthogonalityAndNormIdentity) {
  const Precision p{300};
  const std::size_t n = 10;
  for (const auto& spec : {WeightSpec::legendre(), WeightSpec::hermite(), WeightSpec::scaled_chi(3.0),
                           WeightSpec::gen_laguerre(0.5)}) {
    const auto mu = moment_sequence(spec, 2 * n, p);
    const auto rc = recursion_coeffs(mu, n);
    const auto pis = monic_sequence(rc, n);
    WorkingPrecision scope(p);
    BigReal norm = rc.beta[0];
    for (std::size_t i = 0; i <= n; ++i) {
      ASSERT_EQ(pis[i].degree(), static_cast<int>(i));
      EXPECT_EQ(pis[i].leading(), BigReal(1));
      for (std::size_t j = 0; j < i; ++j) {
        const BigReal ip = inner_product(pis[i], pis[j], mu);
        EXPECT_LE(abs(ip), pow2(-(p.bits / 2))) << spec.name << " i=" << i << " j=" << j;
      }
      if (i < n) {
        // ‖π_i‖² = β_0 β_1 ⋯ β_i
        if (i > 0) norm *= rc.beta[i];
        const BigReal sq = inner_product(pis[i], pis[i], mu);
        EXPECT_LE(abs(sq - norm) / norm, pow2(-(p.bits / 2))) << spec.name << " i=" << i;
      }
    }
  }
}

TEST(MonicSequenceProperty, SymmetricWeightsGiveAlternatingZeros) {
  const Precision p{200};
  const auto pis = monic_for(WeightSpec::hermite(), 9, p);
  WorkingPrecision scope(p);
  for (std::size_t k = 0; k < pis.size(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      if ((k - i) % 2 == 1) EXPECT_LE(abs(pis[k][i]), pow2(-(p.bits - 30))) << k << "," << i;
    }
  }
}

TEST(EvalProperty, MatchesDoubleHornerOnRandomPolynomials) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  WorkingPrecision scope(Precision{200});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(1 + rng() % 8);
    for (auto& v : c) v = coef(rng);
    std::vector<BigReal> bc(c.begin(), c.end());
    const double x = coef(rng);
    double ref = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) ref = ref * x + *it;
    EXPECT_NEAR(to_double(eval(Polynomial(bc), BigReal(x))), ref, 1e-13);
  }
}

}  // namespace
}  // namespace cgq
