#include "cgq/moments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "cgq/error.hpp"

namespace cgq {

WeightSpec WeightSpec::scaled_chi(double m) { return {"scaled-chi", {0.0, kInf}, {m}}; }
WeightSpec WeightSpec::hermite() { return {"hermite", {-kInf, kInf}, {}}; }
WeightSpec WeightSpec::legendre() { return {"legendre", {-1.0, 1.0}, {}}; }
WeightSpec WeightSpec::gen_laguerre(double alpha) { return {"gen-laguerre", {0.0, kInf}, {alpha}}; }

std::string canonical_weight_name(std::string_view name) {
  std::string s;
  s.reserve(name.size());
  for (char c : name) {
    if (c == '.' || c == '_' || c == ' ') {
      s.push_back('-');
    } else {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"scaled-chi-pdf", "scaled-chi"},
      {"generalized-laguerre", "gen-laguerre"},
      {"generalised-laguerre", "gen-laguerre"},
  };
  if (auto it = aliases.find(s); it != aliases.end()) return it->second;
  return s;
}

namespace {

void expect_arity(std::string_view family, std::span<const double> p, std::size_t n) {
  if (p.size() != n) {
    fail(ErrorKind::InvalidParameter, std::string(family) + " takes " + std::to_string(n) +
                                          " parameter(s), got " + std::to_string(p.size()));
  }
}

bool is_odd(unsigned r) { return (r & 1U) != 0; }

WeightFamily scaled_chi_family() {
  WeightFamily f;
  f.name = "scaled-chi";
  f.support = {0.0, kInf};
  f.parameter_names = {"m"};
  f.validate = [](std::span<const double> p) {
    expect_arity("scaled-chi", p, 1);
    if (!(p[0] > 0.0) || !std::isfinite(p[0])) {
      fail(ErrorKind::InvalidParameter, "scaled-chi needs m > 0, got m=" + std::to_string(p[0]));
    }
  };
  // (2/m)^{r/2} Γ((r+m)/2) / Γ(m/2), evaluated in log space.
  f.moment = [](std::span<const double> p, unsigned r, Precision) {
    if (r == 0) return BigReal(1);
    const BigReal two(2);
    const BigReal mr(r);
    const BigReal mm(p[0]);
    const BigReal term1 = (mr / two) * log(two / mm);
    const BigReal term2 = lgamma((mr + mm) / two);
    const BigReal term3 = lgamma(mm / two);
    return exp(term1 + term2 - term3);
  };
  return f;
}

WeightFamily hermite_family() {
  WeightFamily f;
  f.name = "hermite";
  f.support = {-kInf, kInf};
  f.validate = [](std::span<const double> p) { expect_arity("hermite", p, 0); };
  f.moment = [](std::span<const double>, unsigned r, Precision) {
    if (r == 0) return sqrt(const_pi());
    if (is_odd(r)) return BigReal(0);
    return tgamma(BigReal(r + 1) / BigReal(2));
  };
  return f;
}

WeightFamily legendre_family() {
  WeightFamily f;
  f.name = "legendre";
  f.support = {-1.0, 1.0};
  f.validate = [](std::span<const double> p) { expect_arity("legendre", p, 0); };
  f.moment = [](std::span<const double>, unsigned r, Precision) {
    if (is_odd(r)) return BigReal(0);
    return BigReal(2) / BigReal(r + 1);
  };
  return f;
}

WeightFamily gen_laguerre_family() {
  WeightFamily f;
  f.name = "gen-laguerre";
  f.support = {0.0, kInf};
  f.parameter_names = {"alpha"};
  f.validate = [](std::span<const double> p) {
    expect_arity("gen-laguerre", p, 1);
    if (!(p[0] > -1.0) || !std::isfinite(p[0])) {
      fail(ErrorKind::InvalidParameter,
           "gen-laguerre needs alpha > -1, got alpha=" + std::to_string(p[0]));
    }
  };
  f.moment = [](std::span<const double> p, unsigned r, Precision) {
    return tgamma(BigReal(r) + BigReal(p[0]) + BigReal(1));
  };
  return f;
}

}  // namespace

WeightRegistry::WeightRegistry() {
  for (auto f : {scaled_chi_family(), hermite_family(), legendre_family(), gen_laguerre_family()}) {
    families_.emplace(f.name, std::move(f));
  }
}

WeightRegistry& WeightRegistry::global() {
  // Intentionally leaked: lives for the whole process.
  static WeightRegistry* registry = new WeightRegistry();
  return *registry;
}

void WeightRegistry::add(WeightFamily family) {
  family.name = canonical_weight_name(family.name);
  if (family.name.empty()) fail(ErrorKind::InvalidArgument, "weight family needs a name");
  if (!(family.support.lo < family.support.hi)) {
    fail(ErrorKind::InvalidArgument, "support of '" + family.name + "' must satisfy lo < hi");
  }
  if (!family.moment) fail(ErrorKind::InvalidArgument, "weight family needs a moment formula");
  if (!family.validate) family.validate = [](std::span<const double>) {};
  std::unique_lock lock(mutex_);
  if (families_.contains(family.name)) {
    fail(ErrorKind::DuplicateName, "weight family '" + family.name + "' is already registered");
  }
  std::string key = family.name;
  families_.emplace(std::move(key), std::move(family));
}

const WeightFamily& WeightRegistry::find(std::string_view name) const {
  const std::string key = canonical_weight_name(name);
  std::shared_lock lock(mutex_);
  auto it = families_.find(key);
  if (it == families_.end()) {
    fail(ErrorKind::UnknownWeight, "no weight family named '" + std::string(name) + "'");
  }
  return it->second;
}

bool WeightRegistry::contains(std::string_view name) const {
  const std::string key = canonical_weight_name(name);
  std::shared_lock lock(mutex_);
  return families_.contains(key);
}

std::vector<std::string> WeightRegistry::names() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [name, _] : families_) out.push_back(name);
  return out;
}

void register_weight(std::string name, Support support, ParameterValidator validator,
                     MomentFormula formula, std::vector<std::string> parameter_names) {
  WeightRegistry::global().add(WeightFamily{std::move(name), support, std::move(validator),
                                            std::move(formula), std::move(parameter_names)});
}

WeightSpec make_weight_spec(std::string_view name, std::vector<double> parameters) {
  const WeightFamily& family = WeightRegistry::global().find(name);
  WeightSpec spec{family.name, family.support, std::move(parameters)};
  validate(spec);
  return spec;
}

void validate(const WeightSpec& spec) {
  const WeightFamily& family = WeightRegistry::global().find(spec.name);
  family.validate(spec.parameters);
  if (!(spec.support == family.support)) {
    fail(ErrorKind::InvalidParameter, "support of '" + family.name +
                                          "' does not match the registered family support");
  }
}

BigReal moment(const WeightSpec& spec, unsigned r, Precision p) {
  validate(spec);
  const WeightFamily& family = WeightRegistry::global().find(spec.name);
  WorkingPrecision scope(p);
  // Formulas may return a value at a different precision (e.g. an exact constant).
  return family.moment(spec.parameters, r, p).rounded(p);
}

MomentSequence moment_sequence(const WeightSpec& spec, unsigned r_max, Precision p) {
  validate(spec);
  const WeightFamily& family = WeightRegistry::global().find(spec.name);
  WorkingPrecision scope(p);
  MomentSequence seq{spec, p, {}};
  seq.values.reserve(r_max + 1);
  for (unsigned r = 0; r <= r_max; ++r) {
    seq.values.push_back(family.moment(spec.parameters, r, p).rounded(p));
  }
  return seq;
}

}  // namespace cgq
