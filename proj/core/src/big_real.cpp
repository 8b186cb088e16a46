#include "cgq/big_real.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "cgq/error.hpp"

namespace cgq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::UnknownWeight: return "UnknownWeight";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NegativeVariance: return "NegativeVariance";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::BracketCountMismatch: return "BracketCountMismatch";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::RungFailed: return "RungFailed";
    case ErrorKind::LadderInconclusive: return "LadderInconclusive";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

namespace {

thread_local Precision tls_precision{kMinPrecisionBits};


void check_precision(Precision p) {
  if (p.bits < kMinPrecisionBits || p.bits > MPFR_PREC_MAX) {
    fail(ErrorKind::InvalidArgument,
         "precision must be at least " + std::to_string(kMinPrecisionBits) + " bits, got " +
             std::to_string(p.bits));
  }
}

}  // namespace

Precision working_precision() noexcept { return tls_precision; }

WorkingPrecision::WorkingPrecision(Precision p) : previous_(tls_precision) {
  check_precision(p);
  tls_precision = p;
}

WorkingPrecision::~WorkingPrecision() { tls_precision = previous_; }

BigReal::BigReal(Uninitialized, Precision p) { mpfr_init2(value_, static_cast<mpfr_prec_t>(p.bits)); }

BigReal::BigReal() : BigReal(Uninitialized{}, tls_precision) { mpfr_set_zero(value_, 1); }

BigReal::BigReal(double v) : BigReal(Uninitialized{}, tls_precision) {
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigReal::BigReal(double v, Precision p) : BigReal(Uninitialized{}, (check_precision(p), p)) {
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigReal BigReal::from_string(std::string_view text, Precision p) {
  check_precision(p);
  BigReal r(Uninitialized{}, p);
  std::string s(text);
  if (s == "inf" || s == "+inf" || s == "Inf") {
    mpfr_set_inf(r.value_, 1);
    return r;
  }
  if (s == "-inf" || s == "-Inf") {
    mpfr_set_inf(r.value_, -1);
    return r;
  }
  if (s.empty() || mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    fail(ErrorKind::InvalidArgument, "not a decimal number: '" + s + "'");
  }
  return r;
}

BigReal BigReal::from_string(std::string_view text) { return from_string(text, tls_precision); }

BigReal::BigReal(const BigReal& other) : BigReal(Uninitialized{}, other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::rounded(Precision p) const {
  check_precision(p);
  BigReal r(Uninitialized{}, p);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninitialized{}, tls_precision);
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninitialized{}, tls_precision);
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninitialized{}, tls_precision);
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::Uninitialized{}, tls_precision);
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r(BigReal::Uninitialized{}, tls_precision);
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << to_decimal(x, decimal_digits(x.precision()));
}

namespace {

template <typename F>
BigReal unary(const BigReal& x, F f) {
  BigReal r;
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal lgamma(const BigReal& x) { return unary(x, mpfr_lngamma); }
BigReal tgamma(const BigReal& x) { return unary(x, mpfr_gamma); }

BigReal pow(const BigReal& x, long e) {
  BigReal r;
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return (b < a) ? b : a; }

BigReal const_pi() {
  BigReal r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal pow2(long e) {
  BigReal r(1);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

double to_double(const BigReal& x) noexcept { return mpfr_get_d(x.get(), MPFR_RNDN); }

std::size_t decimal_digits(Precision p) noexcept {
  return static_cast<std::size_t>(std::floor(static_cast<double>(p.bits) * 0.30102999566398120));
}

namespace {

struct Digits {
  bool negative = false;
  std::string mantissa;  // significant digits, value = 0.mantissa × 10^exponent
  long exponent = 0;
};

Digits decimal_expansion(const BigReal& x, std::size_t significant_digits) {
  Digits d;
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, significant_digits, x.get(), MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  if (!s.empty() && s.front() == '-') {
    d.negative = true;
    s.erase(0, 1);
  }
  d.mantissa = std::move(s);
  d.exponent = static_cast<long>(e);
  return d;
}

std::string special(const BigReal& x) {
  if (x.is_nan()) return "nan";
  return x.sign() < 0 ? "-inf" : "inf";
}

std::string exponent_suffix(long e) {
  std::string digits = std::to_string(e < 0 ? -e : e);
  if (digits.size() < 2) digits.insert(0, "0");
  return std::string(e < 0 ? "e-" : "e+") + digits;
}

}  // namespace

std::string to_scientific(const BigReal& x, std::size_t significant_digits) {
  if (!x.is_finite()) return special(x);
  if (significant_digits < 1) significant_digits = 1;
  if (x.is_zero()) {
    std::string out = mpfr_signbit(x.get()) ? "-0" : "0";
    if (significant_digits > 1) out += "." + std::string(significant_digits - 1, '0');
    return out + "e+00";
  }
  const Digits d = decimal_expansion(x, significant_digits);
  std::string out = d.negative ? "-" : "";
  out += d.mantissa.substr(0, 1);
  if (d.mantissa.size() > 1) out += "." + d.mantissa.substr(1);
  return out + exponent_suffix(d.exponent - 1);
}

std::string to_decimal(const BigReal& x, std::size_t significant_digits) {
  if (!x.is_finite()) return special(x);
  if (x.is_zero()) return "0";
  if (significant_digits < 1) significant_digits = 1;
  Digits d = decimal_expansion(x, significant_digits);
  while (d.mantissa.size() > 1 && d.mantissa.back() == '0') d.mantissa.pop_back();
  std::string out = d.negative ? "-" : "";
  const long point = d.exponent;  // digits before the decimal point
  const long len = static_cast<long>(d.mantissa.size());
  if (point > 21 || point < -5) {
    out += d.mantissa.substr(0, 1);
    if (len > 1) out += "." + d.mantissa.substr(1);
    return out + exponent_suffix(point - 1);
  }
  if (point <= 0) {
    return out + "0." + std::string(static_cast<std::size_t>(-point), '0') + d.mantissa;
  }
  if (point >= len) {
    return out + d.mantissa + std::string(static_cast<std::size_t>(point - len), '0');
  }
  return out + d.mantissa.substr(0, static_cast<std::size_t>(point)) + "." +
         d.mantissa.substr(static_cast<std::size_t>(point));
}

}  // namespace cgq
