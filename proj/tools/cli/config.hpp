#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgq/ladder.hpp"
#include "cgq/moments.hpp"

namespace cgq::cli {

enum class OutputFormat { Json, Csv };

/// Everything one invocation needs, from flags and/or a config file.
struct RunConfig {
  std::string command;  // "rule" or "moments"
  std::string weight;
  std::optional<Support> support;
  std::vector<std::pair<std::string, double>> params;

  // rule
  std::size_t n = 0;
  std::optional<long> b1;
  std::optional<std::size_t> rungs;
  std::optional<long> step;
  std::string out;
  OutputFormat format = OutputFormat::Json;
  bool verbose = false;

  // moments
  unsigned r = 0;
  long bits = 128;
};

/// Thrown for anything the user got wrong; maps to exit status 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "key = value" lines; '#' starts a comment; repeated keys accumulate.
std::multimap<std::string, std::string> parse_config_text(const std::string& text);

/// Parses "m=2" into ("m", 2).
std::pair<std::string, double> parse_param(const std::string& text);

/// Parses "lo, hi" (or "lo hi"), with inf / -inf tokens.
Support parse_support(const std::string& text);

OutputFormat parse_format(const std::string& text);

/// Resolves the weight name, named parameters and optional support into a
/// validated WeightSpec. Throws cgq::Error (UnknownWeight, InvalidParameter).
WeightSpec resolve_weight(const RunConfig& cfg);

/// Default LadderConfig, overridden by cfg.
LadderConfig resolve_ladder(const RunConfig& cfg);

/// Parses argv (subcommand first). Keys read from --config FILE apply only
/// where the corresponding flag was not given. Returns nullopt after
/// printing help.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

}  // namespace cgq::cli
