#include "cgq/ladder.hpp"

#include <chrono>
#include <thread>
#include <utility>

#include "cgq/hankel.hpp"
#include "cgq/polynomial.hpp"
#include "cgq/rootfinder.hpp"

namespace cgq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> as_doubles(const std::vector<BigReal>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_double(x));
  return out;
}

Rung run_rung(const WeightSpec& spec, std::size_t n, long bits) {
  Rung rung;
  rung.bits = bits;
  try {
    rung.rule = compute_rule(spec, n, Precision{bits}, rung.timings);
  } catch (const Error& e) {
    rung.failure = e.kind();
    rung.message = e.what();
  }
  return rung;
}

template <typename Reduce>
std::optional<BigReal> difference(const Rung& lower, const Rung& upper, bool use_nodes,
                                  Reduce reduce) {
  if (!lower.ok() || !upper.ok()) return std::nullopt;
  WorkingPrecision scope(Precision{upper.bits});
  const auto& a = use_nodes ? lower.rule->nodes : lower.rule->weights;
  const auto& b = use_nodes ? upper.rule->nodes : upper.rule->weights;
  BigReal acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc = reduce(acc, abs(a[i] - b[i]));
  return acc;
}

std::optional<std::size_t> stable_from(const std::vector<Rung>& rungs, bool use_nodes) {
  const std::size_t m = rungs.size();
  auto doubles = [&](std::size_t idx) {
    return as_doubles(use_nodes ? rungs[idx].rule->nodes : rungs[idx].rule->weights);
  };
  if (m < 2 || !rungs[m - 1].ok() || !rungs[m - 2].ok()) return std::nullopt;
  const std::vector<double> top = doubles(m - 1);
  if (doubles(m - 2) != top) return std::nullopt;
  std::size_t k = m - 1;  // 1-based index of rung m−1
  while (k > 1 && rungs[k - 2].ok() && doubles(k - 2) == top) --k;
  return k;
}

}  // namespace

QuadratureRule compute_rule(const WeightSpec& spec, std::size_t n, Precision p,
                            StepTimings& timings) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "a rule needs at least one node");
  WorkingPrecision scope(p);

  auto start = Clock::now();
  const MomentSequence mu = moment_sequence(spec, static_cast<unsigned>(2 * n - 1), p);
  const RecurrenceCoeffs rc = recursion_coeffs(mu, n);
  const std::vector<Polynomial> pis = monic_sequence(rc, n);
  timings.recurrence = seconds_since(start);

  start = Clock::now();
  std::vector<BigReal> taus = nodes(pis.back(), spec);
  timings.nodes = seconds_since(start);

  start = Clock::now();
  std::vector<BigReal> lambdas = weights_from_nodes(taus, mu);
  timings.weights = seconds_since(start);

  return QuadratureRule{spec, n, std::move(taus), std::move(lambdas), p};
}

QuadratureRule compute_rule(const WeightSpec& spec, std::size_t n, Precision p) {
  StepTimings ignored;
  return compute_rule(spec, n, p, ignored);
}

long default_b1(std::size_t n) {
  // ⌈60 + 6.5 n⌉ = 60 + ⌈13 n / 2⌉
  return 60 + static_cast<long>((13 * n + 1) / 2);
}

LadderConfig LadderConfig::defaults(std::size_t n) {
  LadderConfig cfg;
  cfg.n = n;
  cfg.b1 = default_b1(n);
  return cfg;
}

std::vector<long> LadderConfig::bit_sequence() const {
  std::vector<long> out;
  for (std::size_t j = 1; j <= rungs; ++j) out.push_back(bits(j));
  return out;
}

void LadderConfig::validate() const {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  if (rungs < 2) fail(ErrorKind::InvalidArgument, "the ladder needs at least 2 rungs");
  if (b1 < kMinPrecisionBits) {
    fail(ErrorKind::InvalidArgument, "b1 must be at least " + std::to_string(kMinPrecisionBits));
  }
  if (step < 1) fail(ErrorKind::InvalidArgument, "ladder step must be positive");
}

std::string_view to_string(LadderStatus status) noexcept {
  switch (status) {
    case LadderStatus::Certified: return "certified";
    case LadderStatus::RungFailed: return "rung_failed";
    case LadderStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::vector<long> LadderReport::bits() const {
  std::vector<long> out;
  for (const auto& r : rungs) out.push_back(r.bits);
  return out;
}

std::array<std::vector<double>, 3> LadderReport::timing_matrix() const {
  std::array<std::vector<double>, 3> m;
  for (const auto& r : rungs) {
    m[0].push_back(r.timings.recurrence);
    m[1].push_back(r.timings.nodes);
    m[2].push_back(r.timings.weights);
  }
  return m;
}

std::optional<std::size_t> LadderReport::first_failed_rung() const {
  for (std::size_t j = 0; j < rungs.size(); ++j) {
    if (!rungs[j].ok()) return j + 1;
  }
  return std::nullopt;
}

LadderReport run_ladder(const WeightSpec& spec, const LadderConfig& config) {
  config.validate();
  validate(spec);

  LadderReport report;
  report.spec = spec;
  report.config = config;
  report.rungs.resize(config.rungs);
  if (config.parallel) {
    std::vector<std::thread> workers;
    workers.reserve(config.rungs);
    for (std::size_t j = 0; j < config.rungs; ++j) {
      workers.emplace_back([&, j] { report.rungs[j] = run_rung(spec, config.n, config.bits(j + 1)); });
    }
    for (auto& w : workers) w.join();
  } else {
    for (std::size_t j = 0; j < config.rungs; ++j) {
      report.rungs[j] = run_rung(spec, config.n, config.bits(j + 1));
    }
  }

  const auto take_max = [](const BigReal& acc, const BigReal& x) { return max(acc, x); };
  const auto take_sum = [](const BigReal& acc, const BigReal& x) { return acc + x; };
  for (std::size_t j = 1; j < config.rungs; ++j) {
    report.d_tau.push_back(difference(report.rungs[j - 1], report.rungs[j], true, take_max));
    report.d_lambda.push_back(difference(report.rungs[j - 1], report.rungs[j], false, take_sum));
  }
  report.L_nodes = stable_from(report.rungs, true);
  report.L_weights = stable_from(report.rungs, false);

  const Rung& top = report.rungs.back();
  if (top.ok()) {
    report.final_nodes = as_doubles(top.rule->nodes);
    report.final_weights = as_doubles(top.rule->weights);
  }

  if (report.first_failed_rung()) {
    report.status = LadderStatus::RungFailed;
  } else if (!report.L_nodes || !report.L_weights) {
    report.status = LadderStatus::Inconclusive;
  } else {
    report.status = LadderStatus::Certified;
  }
  return report;
}

void require_certified(const LadderReport& report) {
  if (auto j = report.first_failed_rung()) {
    const Rung& r = report.rungs[*j - 1];
    fail(ErrorKind::RungFailed, "rung " + std::to_string(*j) + " (" + std::to_string(r.bits) +
                                    " bits): " + r.message);
  }
  if (report.status == LadderStatus::Inconclusive) {
    fail(ErrorKind::LadderInconclusive,
         "rungs M-1 and M disagree after rounding to binary64; raise b1 or the rung count");
  }
}

}  // namespace cgq
