#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace cgq {

/// Mantissa width of a binary floating-point value.
struct Precision {
  long bits = 53;

  friend constexpr bool operator==(Precision, Precision) = default;
  friend constexpr auto operator<=>(Precision, Precision) = default;
};

inline constexpr long kMinPrecisionBits = 53;

/// Precision used for every arithmetic result produced on the calling thread.
Precision working_precision() noexcept;

/// Sets the calling thread's working precision for the lifetime of the scope.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(Precision p);
  ~WorkingPrecision();

  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  Precision previous_;
};

/// Arbitrary-precision binary floating-point scalar (an owning MPFR value).
///
/// A value keeps the precision it was created with. Arithmetic always rounds
/// its result (to nearest) to the thread's working precision, so a pipeline
/// stage that opens one WorkingPrecision scope computes everything at that
/// precision regardless of where its inputs came from.
class BigReal {
 public:
  BigReal();
  BigReal(double v);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  BigReal(I v) : BigReal() {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
    } else {
      mpfr_set_ui(value_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
  }
  BigReal(double v, Precision p);

  /// Parses a decimal (or "inf"/"-inf") string. Throws InvalidArgument.
  static BigReal from_string(std::string_view text, Precision p);
  static BigReal from_string(std::string_view text);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Precision precision() const noexcept { return {static_cast<long>(mpfr_get_prec(value_))}; }

  /// Same value rounded to `p` bits.
  BigReal rounded(Precision p) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);

  friend bool operator==(const BigReal& a, const BigReal& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x);

 private:
  struct Uninitialized {};
  explicit BigReal(Uninitialized, Precision p);

  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
/// log Γ(x) for x > 0.
BigReal lgamma(const BigReal& x);
BigReal tgamma(const BigReal& x);
BigReal pow(const BigReal& x, long e);
/// x · 2^e, exact apart from the final rounding.
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);
/// π at working precision.
BigReal const_pi();
/// 2^e at working precision.
BigReal pow2(long e);

/// Nearest binary64, ties to even; overflow maps to ±∞.
double to_double(const BigReal& x) noexcept;

/// Scientific notation with exactly `significant_digits` digits, e.g.
/// "-1.2500000e-01". The format is fixed so that serialized reports are stable.
std::string to_scientific(const BigReal& x, std::size_t significant_digits);

/// Human-oriented decimal with at most `significant_digits` digits and
/// trailing zeros removed, e.g. "0.4", "0", "1.7724538509055160273".
std::string to_decimal(const BigReal& x, std::size_t significant_digits);

/// Number of significant decimal digits carried by `p` bits.
std::size_t decimal_digits(Precision p) noexcept;

}  // namespace cgq
