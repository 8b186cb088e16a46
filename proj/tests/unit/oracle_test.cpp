#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "classical.hpp"

namespace cgq::oracle {
namespace {

const Family kHermite{Classical::Hermite, 0.0};
const Family kLegendre{Classical::Legendre, 0.0};
const Family kLaguerre0{Classical::GenLaguerre, 0.0};
const Family kLaguerre1{Classical::GenLaguerre, 1.0};

TEST(ClassicalCoeffs, Examples) {
  WorkingPrecision scope(Precision{128});
  auto [a, b] = classical_coeffs(kHermite, 3);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(b, BigReal(1.5));
  std::tie(a, b) = classical_coeffs(kHermite, 0);
  EXPECT_EQ(b, sqrt(const_pi()));
  std::tie(a, b) = classical_coeffs(kLegendre, 1);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(b, BigReal(1) / BigReal(3));
  std::tie(a, b) = classical_coeffs(kLegendre, 0);
  EXPECT_EQ(b, BigReal(2));
  std::tie(a, b) = classical_coeffs(kLaguerre1, 0);
  EXPECT_EQ(a, BigReal(2));
  EXPECT_EQ(b, BigReal(1));
  std::tie(a, b) = classical_coeffs(kLaguerre1, 4);
  EXPECT_EQ(a, BigReal(10));
  EXPECT_EQ(b, BigReal(20));
}

TEST(ClassicalCoeffs, TagsAndSpecs) {
  EXPECT_EQ(kHermite.tag(), "hermite");
  EXPECT_EQ(kLaguerre1.tag(), "gen-laguerre-a1");
  EXPECT_EQ(kLaguerre1.spec(), WeightSpec::gen_laguerre(1.0));
  EXPECT_EQ(fixture_filename(kLegendre, 16), "legendre_n16.txt");
}

TEST(ReferenceRule, ClosedFormsForSmallN) {
  const Precision p{256};
  WorkingPrecision scope(p);
  auto rule = reference_rule(kLegendre, 2, p);
  const BigReal r3 = sqrt(BigReal(1) / BigReal(3));
  EXPECT_LE(abs(rule.nodes[0] + r3), pow2(-250));
  EXPECT_LE(abs(rule.nodes[1] - r3), pow2(-250));
  EXPECT_LE(abs(rule.weights[0] - BigReal(1)), pow2(-250));
  EXPECT_LE(abs(rule.weights[1] - BigReal(1)), pow2(-250));

  rule = reference_rule(kHermite, 2, p);
  const BigReal r2 = sqrt(BigReal(0.5));
  const BigReal w = sqrt(const_pi()) / BigReal(2);
  EXPECT_LE(abs(rule.nodes[1] - r2), pow2(-250));
  EXPECT_LE(abs(rule.weights[0] - w), pow2(-250));

  rule = reference_rule(kLaguerre0, 1, p);
  EXPECT_EQ(rule.nodes[0], BigReal(1));
  EXPECT_EQ(rule.weights[0], BigReal(1));
}

TEST(ReferenceRule, BisectionMatchesThreePointClosedForms) {
  const Precision p{320};
  WorkingPrecision scope(p);
  const BigReal tol = pow2(-300);

  auto rule = reference_rule(kLegendre, 3, p);
  const BigReal x = sqrt(BigReal(3) / BigReal(5));
  EXPECT_LE(abs(rule.nodes[0] + x), tol);
  EXPECT_LE(abs(rule.nodes[1]), tol);
  EXPECT_LE(abs(rule.nodes[2] - x), tol);
  EXPECT_LE(abs(rule.weights[0] - BigReal(5) / BigReal(9)), tol);
  EXPECT_LE(abs(rule.weights[1] - BigReal(8) / BigReal(9)), tol);

  rule = reference_rule(kHermite, 3, p);
  const BigReal h = sqrt(BigReal(1.5));
  const BigReal sp = sqrt(const_pi());
  EXPECT_LE(abs(rule.nodes[2] - h), tol);
  EXPECT_LE(abs(rule.weights[1] - sp * BigReal(2) / BigReal(3)), tol);
  EXPECT_LE(abs(rule.weights[2] - sp / BigReal(6)), tol);

  // 3! L₃(x) = −x³ + 9x² − 18x + 6; weights checked against μ₀, μ₁ and μ₅ = 5!
  rule = reference_rule(kLaguerre0, 3, p);
  BigReal s0(0), s1(0), s5(0);
  for (std::size_t i = 0; i < 3; ++i) {
    const BigReal& t = rule.nodes[i];
    EXPECT_LE(abs(t * t * t - BigReal(9) * t * t + BigReal(18) * t - BigReal(6)), pow2(-290));
    s0 += rule.weights[i];
    s1 += rule.weights[i] * t;
    s5 += rule.weights[i] * pow(t, 5);
  }
  EXPECT_LE(abs(s0 - BigReal(1)), tol);
  EXPECT_LE(abs(s1 - BigReal(1)), tol);
  EXPECT_LE(abs(s5 - BigReal(120)), pow2(-290));
}

TEST(Fixtures, RoundTripThroughText) {
  const Precision p{kFixtureBits};
  const auto rule = reference_rule(kHermite, 4, p);
  const std::string text = format_fixture(rule);
  const auto back = parse_fixture(text, p);
  ASSERT_EQ(back.n, 4u);
  WorkingPrecision scope(p);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LE(abs(back.nodes[i] - rule.nodes[i]), pow2(-190) * max(BigReal(1), abs(rule.nodes[i])));
    EXPECT_LE(abs(back.weights[i] - rule.weights[i]) / rule.weights[i], pow2(-190));
  }
  EXPECT_THROW(parse_fixture("# n: 2\n1.0\n", p), std::exception);
}

TEST(Fixtures, CheckedInFilesAreRegeneratedBitIdentically) {
  for (const auto& [family, n] : fixture_set()) {
    const std::string path = std::string(CGQ_FIXTURE_DIR) + "/" + fixture_filename(family, n);
    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in) << path;
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto rule = reference_rule(family, n, Precision{kFixtureBits});
    EXPECT_EQ(format_fixture(rule), buffer.str()) << path;
    EXPECT_NE(buffer.str().find("# generator: gen_reference_rules"), std::string::npos);
  }
}

}  // namespace
}  // namespace cgq::oracle
