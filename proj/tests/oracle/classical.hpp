#pragma once

// Independent reference data for the classical weight families. Nothing here
// touches moments, Hankel determinants, monomial coefficients or Brent's
// method; rules come from Sturm-sequence bisection on the Jacobi matrix
// built from closed-form recursion coefficients.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgq/big_real.hpp"
#include "cgq/moments.hpp"

namespace cgq::oracle {

enum class Classical { Hermite, Legendre, GenLaguerre };

struct Family {
  Classical kind = Classical::Hermite;
  double alpha = 0.0;  // gen-laguerre only

  /// "hermite", "legendre", "gen-laguerre-a0", "gen-laguerre-a1", ...
  std::string tag() const;
  WeightSpec spec() const;
};

/// Closed-form (α_k, β_k) at the working precision.
///   Hermite:      α_k = 0, β_0 = √π, β_k = k/2
///   Legendre:     α_k = 0, β_0 = 2,  β_k = 1/(4 − k⁻²)
///   gen-Laguerre: α_k = 2k + α + 1, β_0 = Γ(1 + α), β_k = k(k + α)
std::pair<BigReal, BigReal> classical_coeffs(const Family& family, std::size_t k);

struct ReferenceRule {
  Family family;
  std::size_t n = 0;
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};

/// Closed forms for n ≤ 2; otherwise each node is bracketed by Sturm counts
/// on the Jacobi matrix and bisected to full precision, and weights come from
/// the Christoffel form λ = β_0⋯β_{n−1} / (π_{n−1}(τ) π_n′(τ)).
ReferenceRule reference_rule(const Family& family, std::size_t n, Precision p);

inline constexpr long kFixtureBits = 640;
inline constexpr std::size_t kFixtureDigits = 60;

/// Text fixture: '#' header naming family/n/digits/generator, then n node
/// lines and n weight lines.
std::string format_fixture(const ReferenceRule& rule, std::size_t digits = kFixtureDigits,
                           long bits = kFixtureBits);
ReferenceRule parse_fixture(std::string_view text, Precision p);

std::string fixture_filename(const Family& family, std::size_t n);

/// The families and sizes checked into tests/fixtures.
std::vector<std::pair<Family, std::size_t>> fixture_set();

}  // namespace cgq::oracle
