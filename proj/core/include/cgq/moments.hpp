#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgq/big_real.hpp"

namespace cgq {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Interval carrying the weight function; endpoints may be ±∞.
struct Support {
  double lo = -kInf;
  double hi = kInf;

  friend bool operator==(const Support&, const Support&) = default;
};

/// Declarative description of a nonnegative weight function f.
struct WeightSpec {
  std::string name;
  Support support;
  std::vector<double> parameters;

  static WeightSpec scaled_chi(double m);
  static WeightSpec hermite();
  static WeightSpec legendre();
  static WeightSpec gen_laguerre(double alpha);

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

/// Raw moments μ_0..μ_rmax of one weight function at one precision.
struct MomentSequence {
  WeightSpec spec;
  Precision precision;
  std::vector<BigReal> values;

  const BigReal& operator[](std::size_t r) const { return values[r]; }
  std::size_t size() const noexcept { return values.size(); }
  std::size_t r_max() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Throws Error(InvalidParameter) when the parameter vector is unacceptable.
using ParameterValidator = std::function<void(std::span<const double>)>;
/// Returns μ_r. Called with the working precision already set to `p`.
using MomentFormula = std::function<BigReal(std::span<const double>, unsigned r, Precision p)>;

struct WeightFamily {
  std::string name;
  Support support;
  ParameterValidator validate;
  MomentFormula moment;
  /// Names accepted for parameters on the command line ("m", "alpha").
  std::vector<std::string> parameter_names;
};

/// Lower-cases and folds '.', '_' and ' ' to '-', then resolves aliases, so
/// "Hermite", "scaled.chi.pdf" and "Generalized.Laguerre" all find the
/// built-in families.
std::string canonical_weight_name(std::string_view name);

/// Thread-safe registry of weight families. The four built-in families
/// (scaled-chi, hermite, legendre, gen-laguerre) are always present.
class WeightRegistry {
 public:
  static WeightRegistry& global();

  /// Throws DuplicateName if the canonical name is taken.
  void add(WeightFamily family);
  /// Throws UnknownWeight.
  const WeightFamily& find(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  WeightRegistry();

  mutable std::shared_mutex mutex_;
  std::map<std::string, WeightFamily, std::less<>> families_;
};

void register_weight(std::string name, Support support, ParameterValidator validator,
                     MomentFormula formula, std::vector<std::string> parameter_names = {});

/// Spec of a registered family with its registered support.
WeightSpec make_weight_spec(std::string_view name, std::vector<double> parameters = {});

/// Checks name, parameters and support against the registry.
void validate(const WeightSpec& spec);

BigReal moment(const WeightSpec& spec, unsigned r, Precision p);
MomentSequence moment_sequence(const WeightSpec& spec, unsigned r_max, Precision p);

}  // namespace cgq
