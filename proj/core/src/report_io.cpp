#include "numrad/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "numrad/errors.hpp"

namespace numrad {
namespace {

using json = nlohmann::ordered_json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json config_json(const SuiteConfig& c) {
  json j;
  j["ensembles"] = json::array();
  for (auto k : c.ensembles) j["ensembles"].push_back(std::string(to_string(k)));
  j["dims"] = c.dims;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["ids"] = json::array();
  for (auto id : c.ids) j["ids"].push_back(std::string(to_string(id)));
  j["r_grid"] = c.r_grid;
  j["alpha_grid"] = c.alpha_grid;
  j["functions"] = json::array();
  for (const auto& f : c.functions) j["functions"].push_back(f.to_string());
  j["norms"] = json::array();
  for (const auto& n : c.norms) j["norms"].push_back(n.to_string());
  j["tolerances"] = {{"abs", c.tolerances.abs}, {"rel", c.tolerances.rel}, {"radius", c.tolerances.radius}};
  if (c.inject_reversed) j["inject_reversed"] = std::string(to_string(*c.inject_reversed));
  return j;
}

json params_json(const CheckParams& p) {
  json j;
  j["r"] = p.r;
  j["alpha"] = p.alpha;
  j["f"] = p.f ? json(p.f->to_string()) : json(nullptr);
  j["norm"] = p.norm ? json(p.norm->to_string()) : json(nullptr);
  return j;
}

std::string g17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <class T, class F>
std::vector<T> list(const json& j, const char* key, F convert) {
  if (!j.is_array()) throw InvalidArgument(std::string("config key '") + key + "' must be an array");
  std::vector<T> out;
  for (const auto& item : j) out.push_back(convert(item));
  return out;
}

}  // namespace

std::string config_to_json(const SuiteConfig& config) { return config_json(config).dump(2); }

std::string report_to_json(const RunReport& report) {
  json j;
  j["schema"] = kReportSchema;
  j["suite_version"] = kSuiteVersion;
  j["config"] = config_json(report.config);

  json summary;
  summary["violations"] = report.violations;
  summary["numerical_errors"] = report.numerical_errors;
  summary["min_slack"] = number(report.min_slack);
  summary["violated_ids"] = json::array();
  for (auto id : report.violated_ids()) summary["violated_ids"].push_back(std::string(to_string(id)));
  j["summary"] = summary;

  j["rows"] = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["id"] = std::string(to_string(row.id));
    r["trials"] = row.trials;
    r["evaluations"] = row.evaluations;
    r["failures"] = row.failures;
    r["errors"] = row.errors;
    r["min_slack"] = number(row.min_slack);
    r["worst_digest"] = row.worst_digest;
    r["worst_trial"] = row.worst_trial;
    j["rows"].push_back(r);
  }

  j["failures"] = json::array();
  for (const auto& f : report.failures) {
    json r;
    r["id"] = std::string(to_string(f.id));
    r["trial"] = f.trial;
    r["seed"] = f.seed;
    r["ensemble"] = std::string(to_string(f.ensemble));
    r["n"] = f.n;
    r["params"] = params_json(f.params);
    r["operand_digest"] = f.operand_digest;
    r["chain"] = json::array();
    for (double v : f.chain) r["chain"].push_back(number(v));
    r["slack"] = number(f.slack);
    if (!f.error.empty()) r["error"] = f.error;
    j["failures"].push_back(r);
  }
  return j.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
  std::string out =
      "id,trial,seed,ensemble,n,cells,failures,errors,lhs,rhs,slack,pass,r,alpha,f,norm,operand_digest,error\n";
  for (const auto& rec : report.records) {
    out += std::string(to_string(rec.id)) + ',' + std::to_string(rec.trial) + ',' + std::to_string(rec.seed) + ',' +
           std::string(to_string(rec.ensemble)) + ',' + std::to_string(rec.n) + ',' + std::to_string(rec.cells) +
           ',' + std::to_string(rec.failures) + ',' + std::to_string(rec.errors) + ',';
    if (rec.worst) {
      const auto& w = *rec.worst;
      out += g17(w.lhs) + ',' + g17(w.rhs) + ',' + g17(w.slack) + ',' + (w.pass ? "true" : "false") + ',' +
             g17(w.params.r) + ',' + g17(w.params.alpha) + ',' + (w.params.f ? w.params.f->to_string() : "") + ',' +
             (w.params.norm ? w.params.norm->to_string() : "") + ',' + w.operand_digest + ',';
    } else {
      out += ",,,false,,,,,,";
    }
    out += csv_field(rec.error) + '\n';
  }
  return out;
}

SuiteConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed suite config: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("suite config must be a JSON object");

  SuiteConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "ensembles") {
        c.ensembles = list<EnsembleKind>(value, "ensembles",
                                         [](const json& v) { return parse_ensemble_kind(v.get<std::string>()); });
      } else if (key == "dims") {
        c.dims = list<std::size_t>(value, "dims", [](const json& v) { return v.get<std::size_t>(); });
      } else if (key == "trials") {
        c.trials = value.get<std::size_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "ids") {
        c.ids = list<InequalityId>(value, "ids",
                                   [](const json& v) { return parse_inequality_id(v.get<std::string>()); });
      } else if (key == "r_grid") {
        c.r_grid = list<double>(value, "r_grid", [](const json& v) { return v.get<double>(); });
      } else if (key == "alpha_grid") {
        c.alpha_grid = list<double>(value, "alpha_grid", [](const json& v) { return v.get<double>(); });
      } else if (key == "functions") {
        c.functions = list<ConvexFunctionSpec>(
            value, "functions", [](const json& v) { return ConvexFunctionSpec::parse(v.get<std::string>()); });
      } else if (key == "norms") {
        c.norms = list<NormSpec>(value, "norms", [](const json& v) { return NormSpec::parse(v.get<std::string>()); });
      } else if (key == "tolerances") {
        if (!value.is_object()) throw InvalidArgument("config key 'tolerances' must be an object");
        for (const auto& [tk, tv] : value.items()) {
          if (tk == "abs") c.tolerances.abs = tv.get<double>();
          else if (tk == "rel") c.tolerances.rel = tv.get<double>();
          else if (tk == "radius") c.tolerances.radius = tv.get<double>();
          else throw InvalidArgument("unknown tolerance '" + tk + "'");
        }
      } else {
        throw InvalidArgument("unknown suite config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed suite config: ") + e.what());
  }
  return c;
}

}  // namespace numrad
