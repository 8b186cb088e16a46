#pragma once

#include <cstddef>
#include <vector>

#include "cgq/big_real.hpp"
#include "cgq/hankel.hpp"
#include "cgq/moments.hpp"

namespace cgq {

/// Dense polynomial; coeffs()[i] is the coefficient of x^i. The empty
/// coefficient vector is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigReal> coeffs) : coeffs_(std::move(coeffs)) {}

  /// −1 for the zero polynomial (empty coefficients), otherwise size − 1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<BigReal>& coeffs() const noexcept { return coeffs_; }
  const BigReal& operator[](std::size_t i) const { return coeffs_[i]; }
  const BigReal& leading() const { return coeffs_.back(); }

  /// Largest precision among the coefficients (working precision if empty).
  Precision precision() const noexcept;

 private:
  std::vector<BigReal> coeffs_;
};

/// Horner evaluation at the working precision.
BigReal eval(const Polynomial& p, const BigReal& x);

/// Coefficient convolution at the working precision.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

Polynomial derivative(const Polynomial& p);

/// π_0..π_n from the three-term recurrence, at rc's precision.
/// Each π_k is monic of exact degree k.
std::vector<Polynomial> monic_sequence(const RecurrenceCoeffs& rc, std::size_t n);

/// ∫ p(x) f(x) dx = Σ_k c_k μ_k, at the moments' precision.
BigReal integrate(const Polynomial& p, const MomentSequence& mu);

/// ⟨p, q⟩ = ∫ p q f dx through the moments.
BigReal inner_product(const Polynomial& p, const Polynomial& q, const MomentSequence& mu);

}  // namespace cgq
