#include "cli/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cgq/error.hpp"

namespace cgq::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "+inf" || s == "Inf") return kInf;
  if (s == "-inf" || s == "-Inf") return -kInf;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("invalid number for " + what + ": '" + raw + "'");
  }
  return v;
}

template <typename Int>
Int parse_integer(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("invalid integer for " + what + ": '" + raw + "'");
  }
  return v;
}

}  // namespace

std::multimap<std::string, std::string> parse_config_text(const std::string& text) {
  std::multimap<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    entries.emplace(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

std::pair<std::string, double> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("parameter must look like name=value, got '" + text + "'");
  }
  std::string name = trim(text.substr(0, eq));
  return {name, parse_number(text.substr(eq + 1), "parameter " + name)};
}

Support parse_support(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), '[', ' ');
  std::replace(s.begin(), s.end(), ']', ' ');
  std::istringstream in(s);
  std::string lo;
  std::string hi;
  std::string extra;
  if (!(in >> lo >> hi) || (in >> extra)) {
    throw ConfigError("support must be two endpoints, got '" + text + "'");
  }
  return {parse_number(lo, "support"), parse_number(hi, "support")};
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ConfigError("format must be json or csv, got '" + text + "'");
}

WeightSpec resolve_weight(const RunConfig& cfg) {
  if (cfg.weight.empty()) throw ConfigError("no weight function given (--weight)");
  const WeightFamily& family = WeightRegistry::global().find(cfg.weight);
  std::vector<double> values(family.parameter_names.size(), std::nan(""));
  for (const auto& [name, value] : cfg.params) {
    const auto it = std::find(family.parameter_names.begin(), family.parameter_names.end(), name);
    if (it == family.parameter_names.end()) {
      fail(ErrorKind::InvalidParameter, "weight '" + family.name + "' has no parameter '" + name + "'");
    }
    values[static_cast<std::size_t>(it - family.parameter_names.begin())] = value;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isnan(values[i])) {
      fail(ErrorKind::InvalidParameter,
           "weight '" + family.name + "' needs parameter '" + family.parameter_names[i] + "'");
    }
  }
  WeightSpec spec{family.name, cfg.support.value_or(family.support), std::move(values)};
  validate(spec);
  return spec;
}

LadderConfig resolve_ladder(const RunConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("number of nodes must be at least 1 (-n)");
  LadderConfig ladder = LadderConfig::defaults(cfg.n);
  if (cfg.b1) ladder.b1 = *cfg.b1;
  if (cfg.rungs) ladder.rungs = *cfg.rungs;
  if (cfg.step) ladder.step = *cfg.step;
  ladder.validate();
  return ladder;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  std::string config_file;
  std::string format = "json";
  std::vector<std::string> params;
  long b1 = 0;
  std::size_t rungs = 0;
  long step = 0;

  CLI::App app{"Custom Gauss quadrature rules from closed-form moments"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--weight", cfg.weight, "Weight family (scaled-chi, hermite, legendre, gen-laguerre)");
    sub->add_option("--param", params, "Family parameter name=value, e.g. m=2 or alpha=1");
    sub->add_option("--config", config_file, "Flat key = value config file; flags take precedence");
  };

  CLI::App* rule = app.add_subcommand("rule", "Compute a rule over the precision ladder");
  add_common(rule);
  rule->add_option("-n,--nodes", cfg.n, "Number of nodes");
  rule->add_option("--b1", b1, "Precision of the first rung in bits (default ceil(60 + 6.5 n))");
  rule->add_option("--rungs", rungs, "Number of rungs M (default 5)");
  rule->add_option("--step", step, "Bits added per rung (default 34)");
  rule->add_option("--out", cfg.out, "Output file (default stdout)");
  rule->add_option("--format", format, "json (full report) or csv (final binary64 rule)");
  rule->add_flag("-v,--verbose", cfg.verbose, "Per-rung progress on stderr");

  CLI::App* moments = app.add_subcommand("moments", "Print one raw moment");
  add_common(moments);
  moments->add_option("-r", cfg.r, "Moment order");
  moments->add_option("--bits", cfg.bits, "Working precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  CLI::App* active = rule->parsed() ? rule : moments;
  cfg.command = active->get_name();
  auto given = [&](const std::string& flag) {
    const CLI::Option* opt = active->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };

  if (!config_file.empty()) {
    std::ifstream in(config_file);
    if (!in) throw ConfigError("cannot read config file '" + config_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto entries = parse_config_text(buffer.str());
    std::vector<std::string> file_params;
    for (const auto& [key, value] : entries) {
      if (key == "weight" || key == "name") {
        if (!given("--weight")) cfg.weight = value;
      } else if (key == "param" || key == "parameters") {
        file_params.push_back(value);
      } else if (key == "support") {
        cfg.support = parse_support(value);
      } else if (key == "nodes" || key == "n") {
        if (!given("--nodes")) cfg.n = parse_integer<std::size_t>(value, key);
      } else if (key == "b1") {
        if (!given("--b1")) cfg.b1 = parse_integer<long>(value, key);
      } else if (key == "rungs") {
        if (!given("--rungs")) cfg.rungs = parse_integer<std::size_t>(value, key);
      } else if (key == "step") {
        if (!given("--step")) cfg.step = parse_integer<long>(value, key);
      } else if (key == "out") {
        if (!given("--out")) cfg.out = value;
      } else if (key == "format") {
        if (!given("--format")) format = value;
      } else if (key == "verbose") {
        if (!given("--verbose")) cfg.verbose = (value == "true" || value == "1" || value == "yes");
      } else if (key == "r") {
        if (!given("-r")) cfg.r = parse_integer<unsigned>(value, key);
      } else if (key == "bits") {
        if (!given("--bits")) cfg.bits = parse_integer<long>(value, key);
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
    if (!given("--param")) params = file_params;
  }

  for (const auto& p : params) cfg.params.push_back(parse_param(p));
  cfg.format = parse_format(format);
  if (given("--b1")) cfg.b1 = b1;
  if (given("--rungs")) cfg.rungs = rungs;
  if (given("--step")) cfg.step = step;
  return cfg;
}

}  // namespace cgq::cli
