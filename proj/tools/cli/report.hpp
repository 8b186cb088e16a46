#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgq/ladder.hpp"

namespace cgq::cli {

struct RungDocument {
  long bits = 0;
  std::string status;   // "ok" or the failure kind
  std::string message;  // empty when ok
  std::vector<std::string> nodes;
  std::vector<std::string> weights;

  friend bool operator==(const RungDocument&, const RungDocument&) = default;
};

/// Text form of a LadderReport. High-precision values are decimal strings
/// with ⌈0.302·b⌉ significant digits; only the final rule is binary64.
struct ReportDocument {
  std::string weight;
  std::array<std::string, 2> support;
  std::vector<double> parameters;
  std::size_t n = 0;
  std::vector<long> bits;
  std::string status;
  std::vector<RungDocument> rungs;
  std::vector<std::optional<std::string>> max_abs_diffs_nodes;
  std::vector<std::optional<std::string>> sum_abs_diffs_weights;
  std::optional<std::size_t> L_nodes;
  std::optional<std::size_t> L_weights;
  /// 3 × M seconds: recurrence (steps 1+2), nodes (step 3), weights (step 4).
  std::array<std::vector<double>, 3> timings;
  std::vector<double> nodes;
  std::vector<double> weights;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// ⌈0.302·bits⌉.
std::size_t report_digits(long bits);

ReportDocument make_document(const LadderReport& report);
/// Pretty-printed JSON with a fixed key order and a trailing newline.
std::string serialize(const ReportDocument& doc);
/// Inverse of serialize. Throws ConfigError on malformed input.
ReportDocument parse_report(std::string_view json_text);

/// "node,weight" header plus one %.17g row per node of the final rule.
std::string to_csv(const LadderReport& report);

std::string format_endpoint(double x);

}  // namespace cgq::cli
