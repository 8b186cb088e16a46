#include "cgq/hankel.hpp"

#include <string>

#include "cgq/error.hpp"
#include "cgq/mp_matrix.hpp"

namespace cgq {

namespace {

void require_moments(const MomentSequence& mu, std::size_t highest) {
  if (mu.size() <= highest) {
    fail(ErrorKind::InvalidArgument, "need moments up to mu_" + std::to_string(highest) +
                                         ", have up to mu_" + std::to_string(mu.r_max()));
  }
}

MpMatrix hankel_matrix(const MomentSequence& mu, std::size_t k, bool shift_last_column) {
  MpMatrix h(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t r = (shift_last_column && j == k - 1) ? i + k : i + j;
      h(i, j) = mu[r];
    }
  }
  return h;
}

}  // namespace

BigReal hankel_determinant(const MomentSequence& mu, std::size_t k) {
  WorkingPrecision scope(mu.precision);
  if (k == 0) return BigReal(1);
  require_moments(mu, 2 * k - 2);
  return det_lu(hankel_matrix(mu, k, false));
}

BigReal shifted_hankel_determinant(const MomentSequence& mu, std::size_t k) {
  WorkingPrecision scope(mu.precision);
  if (k == 0) return BigReal(0);
  require_moments(mu, 2 * k - 1);
  if (k == 1) return mu[1].rounded(mu.precision);
  try {
    return det_lu(hankel_matrix(mu, k, true));
  } catch (const Error& e) {
    // Symmetric weights have exactly zero odd moments, which can make Δ'_k
    // exactly singular; its value is then exactly zero.
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    return BigReal(0);
  }
}

RecurrenceCoeffs recursion_coeffs(const MomentSequence& mu, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "recursion_coeffs needs n >= 1");
  require_moments(mu, 2 * n - 1);
  WorkingPrecision scope(mu.precision);

  // delta[k] = Δ_k and shifted[k] = Δ'_k for k = 0..n.
  std::vector<BigReal> delta;
  std::vector<BigReal> shifted;
  delta.reserve(n + 1);
  shifted.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    try {
      delta.push_back(hankel_determinant(mu, k));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularMatrix) throw;
      delta.push_back(BigReal(0));
    }
    if (delta.back().sign() <= 0) {
      fail(ErrorKind::IllConditioned, "Hankel determinant Delta_" + std::to_string(k) +
                                          " is not positive at " +
                                          std::to_string(mu.precision.bits) + " bits");
    }
    shifted.push_back(shifted_hankel_determinant(mu, k));
  }

  RecurrenceCoeffs rc{{}, {}, mu.precision};
  rc.alpha.reserve(n);
  rc.beta.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    rc.alpha.push_back(shifted[k + 1] / delta[k + 1] - shifted[k] / delta[k]);
    if (k == 0) {
      rc.beta.push_back(mu[0].rounded(mu.precision));
    } else {
      rc.beta.push_back(delta[k + 1] * delta[k - 1] / (delta[k] * delta[k]));
    }
  }
  return rc;
}

}  // namespace cgq
