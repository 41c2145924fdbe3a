#include "walkbound/report.hpp"

#include <json.hpp>

#include "walkbound/errors.hpp"
#include "walkbound/version.hpp"

namespace walkbound {

using Json = nlohmann::ordered_json;

const char* report_format_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::text: return "text";
  }
  return "format";
}

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  fail(Errc::invalid_argument, "unknown report format '" + name + "'");
}

namespace {

// Scalars travel as canonical strings; the document mode disambiguates "7"
// (rational) from a floating value that happens to print without a point.
Scalar scalar_from_string(const std::string& s, ArithMode mode) {
  if (mode == ArithMode::floating) return Scalar::floating(std::strtod(s.c_str(), nullptr));
  return parse_scalar(s);
}

Json config_to_json(const CampaignConfig& c) {
  Json j;
  j["family"] = instance_family_name(c.family);
  j["count"] = c.count;
  j["n_min"] = c.n_min;
  j["n_max"] = c.n_max;
  j["extra_edges_max"] = c.extra_edges_max;
  j["tau_ceiling"] = c.tau_ceiling.str();
  j["cost_max"] = c.cost_max.str();
  j["simple_share"] = format_double(c.simple_share);
  j["seed"] = c.seed;
  j["mode"] = arith_mode_name(c.mode);
  j["mc_spot_checks"] = c.mc_spot_checks;
  j["mc_walks"] = c.mc_walks;
  return j;
}

CampaignConfig config_from_json(const Json& j) {
  CampaignConfig c;
  c.family = instance_family_from_name(j.at("family").get<std::string>());
  c.count = j.at("count").get<int>();
  c.n_min = j.at("n_min").get<int>();
  c.n_max = j.at("n_max").get<int>();
  c.extra_edges_max = j.at("extra_edges_max").get<int>();
  c.tau_ceiling = parse_scalar(j.at("tau_ceiling").get<std::string>());
  c.cost_max = parse_scalar(j.at("cost_max").get<std::string>());
  c.simple_share = std::strtod(j.at("simple_share").get<std::string>().c_str(), nullptr);
  c.seed = j.at("seed").get<uint64_t>();
  c.mode = arith_mode_from_name(j.at("mode").get<std::string>());
  c.mc_spot_checks = j.at("mc_spot_checks").get<bool>();
  c.mc_walks = j.at("mc_walks").get<long long>();
  return c;
}

Json instance_to_json(const InstanceRecord& r, ArithMode mode, bool include_records) {
  Json j;
  j["index"] = r.index;
  j["name"] = r.name;
  j["family"] = r.family;
  j["n"] = r.n;
  j["m"] = r.m;
  j["tau"] = r.tau.converted(mode).str();
  j["simple"] = r.simple;
  j["tree"] = r.tree;
  j["max_hitting"] = r.bounds.max_hitting.converted(mode).str();
  j["sharp"] = r.bounds.sharp;
  j["violations"] = r.bounds.violations;
  j["max_residual"] = format_double(r.bounds.max_residual);
  if (include_records) {
    Json records = Json::array();
    for (const PairRecord& p : r.bounds.records) {
      Json row;
      row["source"] = p.source;
      row["target"] = p.target;
      row["kind"] = bound_kind_name(p.kind);
      row["exact"] = p.exact.converted(mode).str();
      row["bound"] = p.bound.converted(mode).str();
      row["slack"] = p.slack.converted(mode).str();
      row["pass"] = p.pass;
      records.push_back(std::move(row));
    }
    j["records"] = std::move(records);
  }
  Json checks = Json::array();
  for (const CrossCheck& c : r.checks) {
    Json row;
    row["name"] = c.name;
    row["applicable"] = c.applicable;
    row["ok"] = c.ok;
    row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  if (r.spot_check) {
    Json s;
    s["walks"] = r.spot_check->walks;
    s["mean"] = format_double(r.spot_check->mean);
    s["sd"] = format_double(r.spot_check->sd);
    s["halfwidth"] = format_double(r.spot_check->halfwidth);
    s["seed"] = r.spot_check->seed;
    s["censored"] = r.spot_check->censored;
    j["spot_check"] = std::move(s);
  } else {
    j["spot_check"] = nullptr;
  }
  j["spot_check_ok"] = r.spot_check_ok;
  j["errors"] = r.errors;
  j["pass"] = r.pass;
  return j;
}

InstanceRecord instance_from_json(const Json& j, ArithMode mode) {
  InstanceRecord r;
  r.index = j.at("index").get<int>();
  r.name = j.at("name").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.tau = scalar_from_string(j.at("tau").get<std::string>(), mode);
  r.simple = j.at("simple").get<bool>();
  r.tree = j.at("tree").get<bool>();
  r.bounds.tau = r.tau;
  r.bounds.simple = r.simple;
  r.bounds.tree = r.tree;
  r.bounds.max_hitting = scalar_from_string(j.at("max_hitting").get<std::string>(), mode);
  r.bounds.sharp = j.at("sharp").get<bool>();
  r.bounds.violations = j.at("violations").get<long long>();
  r.bounds.pass = r.bounds.violations == 0;
  r.bounds.max_residual = std::strtod(j.at("max_residual").get<std::string>().c_str(), nullptr);
  if (j.contains("records")) {
    for (const Json& row : j.at("records")) {
      PairRecord p;
      p.source = row.at("source").get<int>();
      p.target = row.at("target").get<int>();
      p.kind = bound_kind_from_name(row.at("kind").get<std::string>());
      p.exact = scalar_from_string(row.at("exact").get<std::string>(), mode);
      p.bound = scalar_from_string(row.at("bound").get<std::string>(), mode);
      p.slack = scalar_from_string(row.at("slack").get<std::string>(), mode);
      p.pass = row.at("pass").get<bool>();
      r.bounds.records.push_back(std::move(p));
    }
  }
  for (const Json& row : j.at("checks")) {
    CrossCheck c;
    c.name = row.at("name").get<std::string>();
    c.applicable = row.at("applicable").get<bool>();
    c.ok = row.at("ok").get<bool>();
    c.detail = row.at("detail").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  if (!j.at("spot_check").is_null()) {
    const Json& s = j.at("spot_check");
    EstimateSummary e;
    e.walks = s.at("walks").get<long long>();
    e.mean = std::strtod(s.at("mean").get<std::string>().c_str(), nullptr);
    e.sd = std::strtod(s.at("sd").get<std::string>().c_str(), nullptr);
    e.halfwidth = std::strtod(s.at("halfwidth").get<std::string>().c_str(), nullptr);
    e.seed = s.at("seed").get<uint64_t>();
    e.censored = s.at("censored").get<long long>();
    r.spot_check = e;
  }
  r.spot_check_ok = j.at("spot_check_ok").get<bool>();
  r.errors = j.at("errors").get<std::vector<std::string>>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format, bool include_records) {
  const ArithMode mode = report.config.mode;
  if (format == ReportFormat::json) {
    Json j;
    j["version"] = report.version;
    j["config"] = config_to_json(report.config);
    Json instances = Json::array();
    for (const InstanceRecord& r : report.instances)
      instances.push_back(instance_to_json(r, mode, include_records));
    j["instances"] = std::move(instances);
    Json s;
    s["instances"] = report.summary.instances;
    s["records"] = report.summary.records;
    s["bound_violations"] = report.summary.bound_violations;
    s["check_failures"] = report.summary.check_failures;
    s["solver_failures"] = report.summary.solver_failures;
    s["max_residual"] = format_double(report.summary.max_residual);
    s["pass"] = report.summary.pass;
    j["summary"] = std::move(s);
    return j.dump(2) + "\n";
  }

  if (format == ReportFormat::csv) {
    std::string out = "instance,name,source,target,kind,exact,bound,slack,pass\n";
    for (const InstanceRecord& r : report.instances)
      for (const PairRecord& p : r.bounds.records) {
        out += std::to_string(r.index) + "," + r.name + "," + std::to_string(p.source) + "," +
               std::to_string(p.target) + "," + bound_kind_name(p.kind) + "," +
               p.exact.converted(mode).str() + "," + p.bound.converted(mode).str() + "," +
               p.slack.converted(mode).str() + "," + (p.pass ? "true" : "false") + "\n";
      }
    return out;
  }

  std::string out;
  out += "campaign: " + std::string(instance_family_name(report.config.family)) + " x" +
         std::to_string(report.summary.instances) + ", seed " + std::to_string(report.config.seed) +
         ", " + arith_mode_name(mode) + " mode\n";
  for (const InstanceRecord& r : report.instances) {
    long long check_fails = 0;
    for (const CrossCheck& c : r.checks) check_fails += c.ok ? 0 : 1;
    out += "  [" + std::string(r.pass ? "ok" : "FAIL") + "] " + r.name + ": n=" +
           std::to_string(r.n) + " m=" + std::to_string(r.m) + " tau=" + r.tau.str() +
           " max_hitting=" + r.bounds.max_hitting.str() + (r.bounds.sharp ? " sharp" : "") +
           " violations=" + std::to_string(r.bounds.violations) + " check_failures=" +
           std::to_string(check_fails);
    for (const std::string& e : r.errors) out += " error[" + e + "]";
    out += "\n";
  }
  out += "records " + std::to_string(report.summary.records) + ", violations " +
         std::to_string(report.summary.bound_violations) + ", check failures " +
         std::to_string(report.summary.check_failures) + ", solver failures " +
         std::to_string(report.summary.solver_failures) + "\n";
  out += std::string("result: ") + (report.summary.pass ? "pass" : "FAIL") + "\n";
  return out;
}

Report parse_report_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::malformed_line, std::string("report is not valid json: ") + e.what());
  }
  try {
    Report rep;
    rep.version = j.at("version").get<std::string>();
    rep.config = config_from_json(j.at("config"));
    for (const Json& inst : j.at("instances"))
      rep.instances.push_back(instance_from_json(inst, rep.config.mode));
    const Json& s = j.at("summary");
    rep.summary.instances = s.at("instances").get<int>();
    rep.summary.records = s.at("records").get<long long>();
    rep.summary.bound_violations = s.at("bound_violations").get<long long>();
    rep.summary.check_failures = s.at("check_failures").get<long long>();
    rep.summary.solver_failures = s.at("solver_failures").get<long long>();
    rep.summary.max_residual =
        std::strtod(s.at("max_residual").get<std::string>().c_str(), nullptr);
    rep.summary.pass = s.at("pass").get<bool>();
    return rep;
  } catch (const Json::exception& e) {
    fail(Errc::malformed_line, std::string("report json has unexpected shape: ") + e.what());
  }
}

}  // namespace walkbound
