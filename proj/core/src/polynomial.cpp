#include "cgq/polynomial.hpp"

#include <algorithm>
#include <string>

#include "cgq/error.hpp"

namespace cgq {

Precision Polynomial::precision() const noexcept {
  if (coeffs_.empty()) return working_precision();
  Precision p = coeffs_.front().precision();
  for (const auto& c : coeffs_) p = std::max(p, c.precision());
  return p;
}

BigReal eval(const Polynomial& p, const BigReal& x) {
  BigReal acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    mpfr_fma(acc.get(), acc.get(), x.get(), it->get(), MPFR_RNDN);
  }
  return acc;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.size() == 0 || b.size() == 0) return Polynomial{};
  std::vector<BigReal> out(a.size() + b.size() - 1);
  BigReal product;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpfr_mul(product.get(), a[i].get(), b[j].get(), MPFR_RNDN);
      mpfr_add(out[i + j].get(), out[i + j].get(), product.get(), MPFR_RNDN);
    }
  }
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return Polynomial{};
  std::vector<BigReal> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * BigReal(i));
  return Polynomial(std::move(out));
}

std::vector<Polynomial> monic_sequence(const RecurrenceCoeffs& rc, std::size_t n) {
  if (rc.size() < n) {
    fail(ErrorKind::InvalidArgument, "monic_sequence needs " + std::to_string(n) +
                                         " recursion coefficients, have " +
                                         std::to_string(rc.size()));
  }
  WorkingPrecision scope(rc.precision);
  std::vector<Polynomial> seq;
  seq.reserve(n + 1);
  seq.emplace_back(std::vector<BigReal>{BigReal(1)});
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& cur = seq[k];
    // x·π_k − α_k·π_k − β_k·π_{k−1}; the leading 1 is copied, never computed.
    std::vector<BigReal> next(k + 2);
    for (std::size_t i = 0; i <= k; ++i) {
      next[i + 1] += cur[i];
      next[i] -= rc.alpha[k] * cur[i];
    }
    if (k >= 1) {
      const Polynomial& prev = seq[k - 1];
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= rc.beta[k] * prev[i];
    }
    next[k + 1] = BigReal(1);
    seq.emplace_back(std::move(next));
  }
  return seq;
}

BigReal integrate(const Polynomial& p, const MomentSequence& mu) {
  if (p.size() > mu.size()) {
    fail(ErrorKind::InvalidArgument, "integrating degree " + std::to_string(p.degree()) +
                                         " needs moments up to mu_" +
                                         std::to_string(p.degree()));
  }
  WorkingPrecision scope(mu.precision);
  BigReal acc(0);
  BigReal product;
  for (std::size_t k = 0; k < p.size(); ++k) {
    mpfr_mul(product.get(), p[k].get(), mu[k].get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), product.get(), MPFR_RNDN);
  }
  return acc;
}

BigReal inner_product(const Polynomial& p, const Polynomial& q, const MomentSequence& mu) {
  WorkingPrecision scope(mu.precision);
  return integrate(poly_mul(p, q), mu);
}

}  // namespace cgq
