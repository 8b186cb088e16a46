#pragma once

#include <cstddef>
#include <vector>

#include "cgq/big_real.hpp"
#include "cgq/moments.hpp"

namespace cgq {

/// Coefficients of π_{k+1}(x) = (x − α_k) π_k(x) − β_k π_{k−1}(x), k = 0..n−1.
/// β_0 is the total mass μ_0.
struct RecurrenceCoeffs {
  std::vector<BigReal> alpha;
  std::vector<BigReal> beta;
  Precision precision;

  std::size_t size() const noexcept { return alpha.size(); }
};

/// Δ_k = det(μ_{i+j}), 0 ≤ i,j ≤ k−1, with Δ_0 = 1.
BigReal hankel_determinant(const MomentSequence& mu, std::size_t k);

/// Δ'_k: Δ_k's matrix with its last column replaced by (μ_k, …, μ_{2k−1})ᵀ.
/// Δ'_0 = 0 and Δ'_1 = μ_1. An exactly singular matrix gives exactly 0.
BigReal shifted_hankel_determinant(const MomentSequence& mu, std::size_t k);

/// Recursion coefficients from moment determinants:
///   α_k = Δ'_{k+1}/Δ_{k+1} − Δ'_k/Δ_k,   β_k = Δ_{k+1} Δ_{k−1} / Δ_k²,   β_0 = μ_0.
/// Needs μ_0..μ_{2n−1}. Throws IllConditioned if some Δ_k ≤ 0, meaning the
/// moment matrix lost positive definiteness at this precision.
RecurrenceCoeffs recursion_coeffs(const MomentSequence& mu, std::size_t n);

}  // namespace cgq
