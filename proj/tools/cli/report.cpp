#include "cli/report.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>

#include "cli/config.hpp"

namespace cgq::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kDiagnosticDigits = 10;

std::vector<std::string> decimals(const std::vector<BigReal>& xs, long bits) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_scientific(x, report_digits(bits)));
  return out;
}

std::vector<std::optional<std::string>> diagnostics(const std::vector<std::optional<BigReal>>& d) {
  std::vector<std::optional<std::string>> out;
  for (const auto& v : d) {
    out.push_back(v ? std::optional<std::string>(to_scientific(*v, kDiagnosticDigits)) : std::nullopt);
  }
  return out;
}

Json optional_strings(const std::vector<std::optional<std::string>>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(x ? Json(*x) : Json(nullptr));
  return arr;
}

Json optional_index(const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); }

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("report is missing '") + key + "'");
  return j.at(key).get<T>();
}

std::vector<std::optional<std::string>> read_optional_strings(const Json& arr) {
  std::vector<std::optional<std::string>> out;
  for (const auto& x : arr) {
    out.push_back(x.is_null() ? std::nullopt : std::optional<std::string>(x.get<std::string>()));
  }
  return out;
}

std::optional<std::size_t> read_optional_index(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

}  // namespace

std::size_t report_digits(long bits) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(bits) * 0.302));
}

std::string format_endpoint(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

ReportDocument make_document(const LadderReport& report) {
  ReportDocument doc;
  doc.weight = report.spec.name;
  doc.support = {format_endpoint(report.spec.support.lo), format_endpoint(report.spec.support.hi)};
  doc.parameters = report.spec.parameters;
  doc.n = report.config.n;
  doc.bits = report.bits();
  doc.status = std::string(to_string(report.status));
  for (const Rung& r : report.rungs) {
    RungDocument rd;
    rd.bits = r.bits;
    if (r.ok()) {
      rd.status = "ok";
      rd.nodes = decimals(r.rule->nodes, r.bits);
      rd.weights = decimals(r.rule->weights, r.bits);
    } else {
      rd.status = std::string(to_string(*r.failure));
      rd.message = r.message;
    }
    doc.rungs.push_back(std::move(rd));
  }
  doc.max_abs_diffs_nodes = diagnostics(report.d_tau);
  doc.sum_abs_diffs_weights = diagnostics(report.d_lambda);
  doc.L_nodes = report.L_nodes;
  doc.L_weights = report.L_weights;
  doc.timings = report.timing_matrix();
  doc.nodes = report.final_nodes;
  doc.weights = report.final_weights;
  return doc;
}

std::string serialize(const ReportDocument& doc) {
  Json j;
  j["weight"] = {{"name", doc.weight}, {"support", doc.support}, {"parameters", doc.parameters}};
  j["n"] = doc.n;
  j["bits"] = doc.bits;
  j["status"] = doc.status;
  Json rungs = Json::array();
  for (const auto& r : doc.rungs) {
    rungs.push_back({{"bits", r.bits},
                     {"status", r.status},
                     {"message", r.message},
                     {"nodes", r.nodes},
                     {"weights", r.weights}});
  }
  j["rungs"] = std::move(rungs);
  j["max_abs_diffs_nodes"] = optional_strings(doc.max_abs_diffs_nodes);
  j["sum_abs_diffs_weights"] = optional_strings(doc.sum_abs_diffs_weights);
  j["L_nodes"] = optional_index(doc.L_nodes);
  j["L_weights"] = optional_index(doc.L_weights);
  j["timings"] = {{"recurrence", doc.timings[0]}, {"nodes", doc.timings[1]}, {"weights", doc.timings[2]}};
  j["double_nodes"] = doc.nodes;
  j["double_weights"] = doc.weights;
  return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    ReportDocument doc;
    const Json& w = j.at("weight");
    doc.weight = get_field<std::string>(w, "name");
    doc.support = get_field<std::array<std::string, 2>>(w, "support");
    doc.parameters = get_field<std::vector<double>>(w, "parameters");
    doc.n = get_field<std::size_t>(j, "n");
    doc.bits = get_field<std::vector<long>>(j, "bits");
    doc.status = get_field<std::string>(j, "status");
    for (const auto& r : j.at("rungs")) {
      RungDocument rd;
      rd.bits = get_field<long>(r, "bits");
      rd.status = get_field<std::string>(r, "status");
      rd.message = get_field<std::string>(r, "message");
      rd.nodes = get_field<std::vector<std::string>>(r, "nodes");
      rd.weights = get_field<std::vector<std::string>>(r, "weights");
      doc.rungs.push_back(std::move(rd));
    }
    doc.max_abs_diffs_nodes = read_optional_strings(j.at("max_abs_diffs_nodes"));
    doc.sum_abs_diffs_weights = read_optional_strings(j.at("sum_abs_diffs_weights"));
    doc.L_nodes = read_optional_index(j.at("L_nodes"));
    doc.L_weights = read_optional_index(j.at("L_weights"));
    const Json& t = j.at("timings");
    doc.timings = {get_field<std::vector<double>>(t, "recurrence"),
                   get_field<std::vector<double>>(t, "nodes"),
                   get_field<std::vector<double>>(t, "weights")};
    doc.nodes = get_field<std::vector<double>>(j, "double_nodes");
    doc.weights = get_field<std::vector<double>>(j, "double_weights");
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const LadderReport& report) {
  std::string out = "node,weight\n";
  char line[96];
  for (std::size_t i = 0; i < report.final_nodes.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", report.final_nodes[i], report.final_weights[i]);
    out += line;
  }
  return out;
}

}  // namespace cgq::cli
