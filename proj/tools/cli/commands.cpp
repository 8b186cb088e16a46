#include "cli/commands.hpp"

#include <fstream>
#include <ostream>

#include "cgq/error.hpp"
#include "cli/report.hpp"

namespace cgq::cli {

namespace {

void print_bits(const std::vector<long>& bits, std::ostream& err) {
  err << "b = (";
  for (std::size_t i = 0; i < bits.size(); ++i) err << (i ? ", " : "") << bits[i];
  err << ")\n";
}

int exit_code_for(LadderStatus status) {
  switch (status) {
    case LadderStatus::Certified: return kExitOk;
    case LadderStatus::RungFailed: return kExitRungFailed;
    case LadderStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitRungFailed;
}

}  // namespace

int cmd_rule(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const WeightSpec spec = resolve_weight(cfg);
  const LadderConfig ladder = resolve_ladder(cfg);
  print_bits(ladder.bit_sequence(), err);

  const LadderReport report = run_ladder(spec, ladder);
  if (cfg.verbose) {
    for (std::size_t j = 0; j < report.rungs.size(); ++j) {
      const Rung& r = report.rungs[j];
      err << "rung " << j + 1 << " (" << r.bits << " bits): "
          << (r.ok() ? std::string("ok") : r.message) << '\n';
    }
  }

  const std::string text =
      cfg.format == OutputFormat::Csv ? to_csv(report) : serialize(make_document(report));
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + cfg.out + "'");
    file << text;
  }

  if (auto j = report.first_failed_rung()) {
    err << "rung " << *j << " failed: " << report.rungs[*j - 1].message << '\n';
  } else if (report.status == LadderStatus::Inconclusive) {
    err << "ladder inconclusive: rungs M-1 and M disagree in binary64\n";
  }
  return exit_code_for(report.status);
}

int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const WeightSpec spec = resolve_weight(cfg);
  const Precision p{cfg.bits};
  const BigReal mu = moment(spec, cfg.r, p);
  out << to_decimal(mu, decimal_digits(p)) << '\n';
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_command_line(argc, argv, out);
    if (!cfg) return kExitOk;
    return cfg->command == "rule" ? cmd_rule(*cfg, out, err) : cmd_moments(*cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitConfigError;
}

}  // namespace cgq::cli
