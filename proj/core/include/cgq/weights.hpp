#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cgq/big_real.hpp"
#include "cgq/moments.hpp"
#include "cgq/polynomial.hpp"

namespace cgq {

/// n-point rule Σ λ_i g(τ_i) ≈ ∫ g f dx.
struct QuadratureRule {
  WeightSpec spec;
  std::size_t n = 0;
  std::vector<BigReal> nodes;    // ascending
  std::vector<BigReal> weights;  // all positive
  Precision precision;
};

/// ℓ_j(x) = Π_{i≠j} (x − τ_i)/(τ_j − τ_i), with j a 0-based index.
Polynomial lagrange_basis(std::span<const BigReal> nodes, std::size_t j);

/// λ_j = ∫ ℓ_j(x)² f(x) dx, expanded over the moments μ_0..μ_{2(n−1)}.
/// Throws NonPositiveWeight if some λ_j ≤ 0.
std::vector<BigReal> weights_from_nodes(std::span<const BigReal> nodes, const MomentSequence& mu);

}  // namespace cgq
