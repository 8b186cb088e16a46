#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgq/big_real.hpp"
#include "cgq/error.hpp"
#include "cgq/moments.hpp"
#include "cgq/weights.hpp"

namespace cgq {

/// Wall-clock seconds per pipeline stage.
struct StepTimings {
  double recurrence = 0.0;  // moments, recursion coefficients and π_n
  double nodes = 0.0;       // root bounding, isolation and refinement
  double weights = 0.0;     // squared Lagrange basis integrated against the moments
};

/// Runs moments → recursion coefficients → π_n → nodes → weights at one
/// precision. `timings` is filled stage by stage, so it is meaningful even
/// when a later stage throws.
QuadratureRule compute_rule(const WeightSpec& spec, std::size_t n, Precision p,
                            StepTimings& timings);
QuadratureRule compute_rule(const WeightSpec& spec, std::size_t n, Precision p);

/// ⌈60 + 6.5 n⌉.
long default_b1(std::size_t n);

/// Precisions b_j = b1 + step·(j − 1), j = 1..rungs.
struct LadderConfig {
  std::size_t n = 1;
  std::size_t rungs = 5;
  long b1 = 67;
  long step = 34;
  /// Run the rungs on separate threads. Results do not depend on this.
  bool parallel = false;

  static LadderConfig defaults(std::size_t n);

  long bits(std::size_t j) const { return b1 + step * static_cast<long>(j - 1); }
  std::vector<long> bit_sequence() const;
  /// Throws InvalidArgument.
  void validate() const;
};

struct Rung {
  long bits = 0;
  std::optional<QuadratureRule> rule;
  std::optional<ErrorKind> failure;
  std::string message;
  StepTimings timings;

  bool ok() const noexcept { return rule.has_value(); }
};

enum class LadderStatus { Certified, RungFailed, Inconclusive };

std::string_view to_string(LadderStatus status) noexcept;

struct LadderReport {
  WeightSpec spec;
  LadderConfig config;
  std::vector<Rung> rungs;
  /// Entry j−2 compares rungs j−1 and j; empty when either rung failed.
  /// d_tau = max_i |Δτ_i|, d_lambda = Σ_i |Δλ_i|.
  std::vector<std::optional<BigReal>> d_tau;
  std::vector<std::optional<BigReal>> d_lambda;
  /// Smallest 1-based rung k such that rungs k..M agree after rounding to
  /// binary64; empty unless rungs M−1 and M agree.
  std::optional<std::size_t> L_nodes;
  std::optional<std::size_t> L_weights;
  /// Rung M rounded to binary64 (empty if rung M failed).
  std::vector<double> final_nodes;
  std::vector<double> final_weights;
  LadderStatus status = LadderStatus::Certified;

  std::vector<long> bits() const;
  /// Rows: recurrence, nodes, weights; one column per rung.
  std::array<std::vector<double>, 3> timing_matrix() const;
  /// 1-based index of the first failed rung, if any.
  std::optional<std::size_t> first_failed_rung() const;
};

/// Computes the rule at every rung and the convergence diagnostics. Failed
/// rungs are recorded rather than thrown; invalid spec or config throws.
LadderReport run_ladder(const WeightSpec& spec, const LadderConfig& config);

/// Throws RungFailed or LadderInconclusive unless the report is certified.
void require_certified(const LadderReport& report);

}  // namespace cgq
