// Command line front end over the walkbound library: exact solves, bound
// audits, visit counts, commute times, Monte Carlo estimation, randomized
// connectivity, instance campaigns, and report verification.
//
// Exit codes: 0 success (and, where applicable, all bounds/identities hold);
// 1 bound violation, identity failure, solver failure, or censored sampling;
// 2 usage, parse, or precondition errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "walkbound/bounds.hpp"
#include "walkbound/campaign.hpp"
#include "walkbound/errors.hpp"
#include "walkbound/generate.hpp"
#include "walkbound/graph.hpp"
#include "walkbound/parse.hpp"
#include "walkbound/report.hpp"
#include "walkbound/scalar.hpp"
#include "walkbound/simulate.hpp"
#include "walkbound/solver.hpp"
#include "walkbound/tree.hpp"
#include "walkbound/version.hpp"

namespace wb = walkbound;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string graph_path;
  std::string costs_spec;
  std::string mode_name = "auto";
  std::string format_name = "text";
  std::string out_path;
  std::string target_label;
  std::string source_label;
  std::string start_label;
  std::string vertex_label;
  std::vector<std::string> edge_labels;
  std::vector<std::string> target_labels;
  long long walks = 10000;
  long long max_steps = wb::kDefaultStepGuard;
  long long walk_length = -1;  // -1 = library default (2N)
  double epsilon = 0.01;
  uint64_t seed = 0;
  // generate
  std::string family_name = "random-connected";
  int count = 10;
  int n_min = 4;
  int n_max = 12;
  int extra_edges_max = 8;
  std::string tau = "1";
  std::string cost_max = "1";
  double simple_share = 0.5;
  std::string gen_mode = "rational";
  bool mc_spot_checks = false;
  long long mc_walks = 20000;
  bool no_records = false;
  std::string dump_dir;
  // verify
  std::string report_path;
};

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) wb::fail(wb::Errc::io_failure, "cannot open '" + out_path + "' for writing");
  f << text;
  f.flush();
  if (!f) wb::fail(wb::Errc::io_failure, "short write to '" + out_path + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) wb::fail(wb::Errc::io_failure, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

wb::ArithMode choose_mode(const std::string& name, const wb::ParsedDocument& doc) {
  if (name == "auto")
    return doc.mode == wb::ArithMode::floating ? wb::ArithMode::floating
                                               : wb::default_mode(doc.graph.vertex_count());
  return wb::arith_mode_from_name(name);
}

int resolve_vertex(const wb::Graph& g, const std::string& label, const char* role) {
  int v = g.vertex_by_label(label);
  if (v < 0)
    wb::fail(wb::Errc::invalid_argument,
             std::string(role) + ": no vertex labeled '" + label + "'");
  return v;
}

// --costs accepts "unit", a cost sidecar file, or one numeric literal applied
// to every edge. Absent that, a cost column in the graph document wins, and
// unit costs are the fallback.
wb::CostFunction resolve_costs(const wb::ParsedDocument& doc, const std::string& spec,
                               wb::ArithMode mode) {
  if (!spec.empty()) {
    if (spec == "unit") return wb::CostFunction::unit(doc.graph).converted(mode);
    if (std::filesystem::exists(spec))
      return wb::parse_costs_file(doc.graph, spec).converted(mode);
    wb::Scalar c(0);
    try {
      c = wb::parse_scalar(spec);
    } catch (const wb::Error&) {
      wb::fail(wb::Errc::invalid_argument,
               "--costs: expected 'unit', a readable file, or a numeric literal, got '" + spec +
                   "'");
    }
    std::vector<wb::Scalar> f(static_cast<size_t>(doc.graph.edge_count()), c);
    return wb::CostFunction(doc.graph, std::move(f)).converted(mode);
  }
  if (doc.costs) return doc.costs->converted(mode);
  return wb::CostFunction::unit(doc.graph).converted(mode);
}

wb::ReportFormat pick_format(const std::string& name, bool csv_ok) {
  wb::ReportFormat fmt = wb::report_format_from_name(name);
  if (fmt == wb::ReportFormat::csv && !csv_ok)
    wb::fail(wb::Errc::invalid_argument, "csv output is not available for this command");
  return fmt;
}

std::string describe(const wb::ParsedDocument& doc, wb::ArithMode mode) {
  const wb::Graph& g = doc.graph;
  wb::Scalar tau = wb::asymmetry(g, doc.weights);
  std::string s = "n=" + std::to_string(g.vertex_count()) +
                  " m=" + std::to_string(g.edge_count()) + " tau=" + tau.str();
  if (wb::is_simple(g, doc.weights)) s += " simple";
  if (wb::is_tree(g)) s += " tree";
  s += std::string(" mode=") + wb::arith_mode_name(mode);
  return s;
}

int run_exact(const Options& o) {
  wb::ParsedDocument doc = wb::parse_graph_file(o.graph_path);
  const wb::Graph& g = doc.graph;
  wb::ArithMode mode = choose_mode(o.mode_name, doc);
  int a = resolve_vertex(g, o.target_label, "--target");
  wb::LaplacianSystem sys(wb::WalkSpec(g, doc.weights, a), mode);
  wb::SolveResult hit = sys.hitting_times();
  std::optional<wb::SolveResult> cost_hit;
  if (!o.costs_spec.empty() || doc.costs) {
    wb::CostFunction f = resolve_costs(doc, o.costs_spec, mode);
    cost_hit = sys.cost_hitting_times(f);
  }
  wb::Scalar max_hit(0);
  for (const wb::Scalar& h : hit.values)
    if (h > max_hit) max_hit = h;
  double residual = std::max(hit.residual, cost_hit ? cost_hit->residual : 0.0);

  wb::ReportFormat fmt = pick_format(o.format_name, true);
  if (fmt == wb::ReportFormat::json) {
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["mode"] = wb::arith_mode_name(mode);
    j["target"] = g.label(a);
    j["tau"] = wb::asymmetry(g, doc.weights).str();
    j["simple"] = wb::is_simple(g, doc.weights);
    j["tree"] = wb::is_tree(g);
    Json hv = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v) hv[g.label(v)] = hit.values[v].str();
    j["hitting"] = std::move(hv);
    if (cost_hit) {
      Json cv = Json::object();
      for (int v = 0; v < g.vertex_count(); ++v) cv[g.label(v)] = cost_hit->values[v].str();
      j["cost_hitting"] = std::move(cv);
    }
    j["max_hitting"] = max_hit.str();
    j["residual"] = wb::format_double(residual);
    deliver(j.dump(2) + "\n", o.out_path);
  } else if (fmt == wb::ReportFormat::csv) {
    std::string out = cost_hit ? "vertex,hitting,cost_hitting\n" : "vertex,hitting\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      out += g.label(v) + "," + hit.values[v].str();
      if (cost_hit) out += "," + cost_hit->values[v].str();
      out += "\n";
    }
    deliver(out, o.out_path);
  } else {
    std::string out = describe(doc, mode) + " target=" + g.label(a) + "\n";
    out += cost_hit ? "hitting times (steps, then cost):\n" : "hitting times:\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      out += "  " + g.label(v) + ": " + hit.values[v].str();
      if (cost_hit) out += "   cost " + cost_hit->values[v].str();
      out += "\n";
    }
    out += "max hitting: " + max_hit.str() + "\n";
    out += "residual: " + wb::format_double(residual) + "\n";
    deliver(out, o.out_path);
  }
  return 0;
}

int run_bounds(const Options& o) {
  wb::ParsedDocument doc = wb::parse_graph_file(o.graph_path);
  const wb::Graph& g = doc.graph;
  wb::ArithMode mode = choose_mode(o.mode_name, doc);
  wb::CostFunction f = resolve_costs(doc, o.costs_spec, mode);
  std::optional<std::vector<int>> targets;
  if (!o.target_labels.empty()) {
    targets.emplace();
    for (const std::string& label : o.target_labels)
      targets->push_back(resolve_vertex(g, label, "--target"));
  }
  wb::BoundReport rep = wb::audit(g, doc.weights, f, targets, mode);

  wb::ReportFormat fmt = pick_format(o.format_name, true);
  if (fmt == wb::ReportFormat::json) {
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["mode"] = wb::arith_mode_name(mode);
    j["tau"] = rep.tau.str();
    j["simple"] = rep.simple;
    j["tree"] = rep.tree;
    j["max_hitting"] = rep.max_hitting.str();
    j["sharp"] = rep.sharp;
    j["violations"] = rep.violations;
    j["max_residual"] = wb::format_double(rep.max_residual);
    j["pass"] = rep.pass;
    Json records = Json::array();
    for (const wb::PairRecord& p : rep.records) {
      Json row;
      row["source"] = g.label(p.source);
      row["target"] = g.label(p.target);
      row["kind"] = wb::bound_kind_name(p.kind);
      row["exact"] = p.exact.str();
      row["bound"] = p.bound.str();
      row["slack"] = p.slack.str();
      row["pass"] = p.pass;
      records.push_back(std::move(row));
    }
    j["records"] = std::move(records);
    deliver(j.dump(2) + "\n", o.out_path);
  } else if (fmt == wb::ReportFormat::csv) {
    std::string out = "source,target,kind,exact,bound,slack,pass\n";
    for (const wb::PairRecord& p : rep.records)
      out += g.label(p.source) + "," + g.label(p.target) + "," + wb::bound_kind_name(p.kind) +
             "," + p.exact.str() + "," + p.bound.str() + "," + p.slack.str() + "," +
             (p.pass ? "true" : "false") + "\n";
    deliver(out, o.out_path);
  } else {
    std::string out = describe(doc, mode) + "\n";
    out += "records: " + std::to_string(rep.records.size()) + "\n";
    out += "max hitting: " + rep.max_hitting.str() + (rep.sharp ? " (sharp: m^2)" : "") + "\n";
    out += "max residual: " + wb::format_double(rep.max_residual) + "\n";
    for (const wb::PairRecord& p : rep.records)
      if (!p.pass)
        out += "VIOLATION " + std::string(wb::bound_kind_name(p.kind)) + " source=" +
               g.label(p.source) + " target=" + g.label(p.target) + " exact=" + p.exact.str() +
               " bound=" + p.bound.str() + "\n";
    out += "violations: " + std::to_string(rep.violations) + "\n";
    out += std::string("result: ") + (rep.pass ? "pass" : "FAIL") + "\n";
    deliver(out, o.out_path);
  }
  return rep.pass ? 0 : 1;
}

int run_visits(const Options& o) {
  wb::ParsedDocument doc = wb::parse_graph_file(o.graph_path);
  const wb::Graph& g = doc.graph;
  wb::ArithMode mode = choose_mode(o.mode_name, doc);
  int a = resolve_vertex(g, o.target_label, "--target");
  wb::WalkSpec spec(g, doc.weights, a);

  if (o.vertex_label.empty() && o.edge_labels.empty())
    wb::fail(wb::Errc::invalid_argument, "visits needs --vertex or --edge");
  wb::SolveResult r(
      wb::SolveResult{wb::ResultKind::vertex_visits, mode, {}, 0.0});
  std::string what;
  if (!o.vertex_label.empty()) {
    int x = resolve_vertex(g, o.vertex_label, "--vertex");
    r = wb::vertex_visit_counts(spec, x, mode);
    what = "visits to vertex " + g.label(x);
  } else {
    int u = resolve_vertex(g, o.edge_labels[0], "--edge");
    int v = resolve_vertex(g, o.edge_labels[1], "--edge");
    int e = g.edge_index(u, v);
    if (e < 0)
      wb::fail(wb::Errc::invalid_argument, "--edge: {" + o.edge_labels[0] + ", " +
                                               o.edge_labels[1] + "} is not an edge");
    r = wb::edge_visit_counts(spec, e, mode);
    what = "traversals of edge {" + g.label(u) + ", " + g.label(v) + "}";
  }

  wb::ReportFormat fmt = pick_format(o.format_name, true);
  if (fmt == wb::ReportFormat::json) {
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["mode"] = wb::arith_mode_name(mode);
    j["target"] = g.label(a);
    j["quantity"] = what;
    Json vv = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v) vv[g.label(v)] = r.values[v].str();
    j["expected_by_start"] = std::move(vv);
    j["residual"] = wb::format_double(r.residual);
    deliver(j.dump(2) + "\n", o.out_path);
  } else if (fmt == wb::ReportFormat::csv) {
    std::string out = "start,expected\n";
    for (int v = 0; v < g.vertex_count(); ++v)
      out += g.label(v) + "," + r.values[v].str() + "\n";
    deliver(out, o.out_path);
  } else {
    std::string out = describe(doc, mode) + " target=" + g.label(a) + "\n";
    out += "expected " + what + ", by start vertex:\n";
    for (int v = 0; v < g.vertex_count(); ++v)
      out += "  " + g.label(v) + ": " + r.values[v].str() + "\n";
    out += "residual: " + wb::format_double(r.residual) + "\n";
    deliver(out, o.out_path);
  }
  return 0;
}

int run_commute(const Options& o) {
  wb::ParsedDocument doc = wb::parse_graph_file(o.graph_path);
  const wb::Graph& g = doc.graph;
  wb::ArithMode mode = choose_mode(o.mode_name, doc);
  int u = resolve_vertex(g, o.source_label, "--source");
  int v = resolve_vertex(g, o.target_label, "--target");
  wb::Scalar c = wb::commute_time(g, doc.weights, u, v, mode);
  wb::Scalar res = wb::effective_resistance(g, doc.weights, u, v, mode);
  wb::Scalar total = wb::network_total_conductance(doc.weights.converted(mode));
  wb::Scalar product = total * res;
  bool identity_ok;
  if (c.is_rational() && product.is_rational()) {
    identity_ok = c == product;
  } else {
    double dc = c.to_double(), dp = product.to_double();
    identity_ok = std::abs(dc - dp) <= 1e-9 * std::max(1.0, std::abs(dp));
  }

  wb::ReportFormat fmt = pick_format(o.format_name, false);
  if (fmt == wb::ReportFormat::json) {
    Json j;
    j["mode"] = wb::arith_mode_name(mode);
    j["source"] = g.label(u);
    j["target"] = g.label(v);
    j["commute"] = c.str();
    j["effective_resistance"] = res.str();
    j["total_conductance"] = total.str();
    j["conductance_times_resistance"] = product.str();
    j["identity_ok"] = identity_ok;
    deliver(j.dump(2) + "\n", o.out_path);
  } else {
    std::string out = describe(doc, mode) + "\n";
    out += "commute(" + g.label(u) + ", " + g.label(v) + "): " + c.str() + "\n";
    out += "effective resistance: " + res.str() + "\n";
    out += "total conductance (2 sum w): " + total.str() + "\n";
    out += std::string("identity commute = conductance x resistance: ") +
           (identity_ok ? "ok" : "FAIL") + "\n";
    deliver(out, o.out_path);
  }
  return identity_ok ? 0 : 1;
}

int run_simulate(const Options& o) {
  wb::ParsedDocument doc = wb::parse_graph_file(o.graph_path);
  const wb::Graph& g = doc.graph;
  int a = resolve_vertex(g, o.target_label, "--target");
  int start = resolve_vertex(g, o.start_label, "--start");
  wb::WalkSpec spec(g, doc.weights, a);
  std::optional<wb::CostFunction> f;
  if (!o.costs_spec.empty() || doc.costs)
    f = resolve_costs(doc, o.costs_spec, doc.mode);
  wb::EstimateSummary est =
      wb::estimate_hitting(spec, f ? &*f : nullptr, start, o.walks, o.seed, o.max_steps);

  // Exact reference when a direct solve is cheap enough to throw in for free.
  std::optional<wb::Scalar> exact;
  bool consistent = true;
  if (g.vertex_count() <= 400) {
    wb::ArithMode mode = choose_mode(o.mode_name, doc);
    wb::LaplacianSystem sys(spec, mode);
    wb::SolveResult r = f ? sys.cost_hitting_times(*f) : sys.hitting_times();
    exact = r.values[start];
    consistent = std::abs(est.mean - exact->to_double()) <= 4.0 * est.halfwidth + 1e-6;
  }

  wb::ReportFormat fmt = pick_format(o.format_name, false);
  if (fmt == wb::ReportFormat::json) {
    Json j;
    j["target"] = g.label(a);
    j["start"] = g.label(start);
    j["quantity"] = f ? "cost_to_absorption" : "steps_to_absorption";
    j["walks"] = est.walks;
    j["seed"] = est.seed;
    j["mean"] = wb::format_double(est.mean);
    j["sd"] = wb::format_double(est.sd);
    j["halfwidth95"] = wb::format_double(est.halfwidth);
    if (exact) {
      j["exact"] = exact->str();
      j["abs_error"] = wb::format_double(std::abs(est.mean - exact->to_double()));
      j["consistent"] = consistent;
    }
    deliver(j.dump(2) + "\n", o.out_path);
  } else {
    std::string out = describe(doc, doc.mode) + " target=" + g.label(a) + " start=" +
                      g.label(start) + "\n";
    out += std::string("estimating ") + (f ? "cost to absorption" : "steps to absorption") +
           " over " + std::to_string(est.walks) + " walks, seed " + std::to_string(est.seed) +
           "\n";
    out += "mean: " + wb::format_double(est.mean) + "\n";
    out += "sd: " + wb::format_double(est.sd) + "\n";
    out += "95% halfwidth: " + wb::format_double(est.halfwidth) + "\n";
    if (exact) {
      out += "exact: " + exact->str() + "\n";
      out += "abs error: " + wb::format_double(std::abs(est.mean - exact->to_double())) + "\n";
      out += std::string("consistent (within 4 halfwidths): ") + (consistent ? "yes" : "NO") +
             "\n";
    }
    deliver(out, o.out_path);
  }
  return consistent ? 0 : 1;
}

int run_connect(const Options& o) {
  wb::ParsedDocument doc = wb::parse_graph_file(o.graph_path);
  const wb::Graph& g = doc.graph;
  int u = resolve_vertex(g, o.source_label, "--source");
  int v = resolve_vertex(g, o.target_label, "--target");
  std::optional<long long> length;
  if (o.walk_length >= 0) length = o.walk_length;
  wb::ConnectivityVerdict verdict =
      wb::st_connectivity(g, doc.weights, u, v, o.epsilon, length, o.seed);
  double miss = std::pow(0.5, verdict.repetitions_used);

  wb::ReportFormat fmt = pick_format(o.format_name, false);
  if (fmt == wb::ReportFormat::json) {
    Json j;
    j["source"] = g.label(u);
    j["target"] = g.label(v);
    j["epsilon"] = wb::format_double(verdict.epsilon);
    j["walk_length"] = verdict.walk_length;
    j["repetitions_used"] = verdict.repetitions_used;
    j["connected_certain"] = verdict.connected_certain;
    if (!verdict.connected_certain) j["false_negative_probability_bound"] = wb::format_double(miss);
    deliver(j.dump(2) + "\n", o.out_path);
  } else {
    std::string out = "walk length " + std::to_string(verdict.walk_length) + ", repetitions " +
                      std::to_string(verdict.repetitions_used) + ", epsilon " +
                      wb::format_double(verdict.epsilon) + "\n";
    if (verdict.connected_certain)
      out += "verdict: connected, a walk from '" + g.label(u) + "' reached '" + g.label(v) +
             "'\n";
    else
      out += "verdict: unresolved, no walk arrived; a truly connected pair evades this many "
             "repetitions with probability <= " +
             wb::format_double(miss) + "\n";
    deliver(out, o.out_path);
  }
  return 0;  // the verdict is the output, not an error state
}

int run_generate(const Options& o) {
  wb::CampaignConfig cfg;
  cfg.family = wb::instance_family_from_name(o.family_name);
  cfg.count = o.count;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  cfg.extra_edges_max = o.extra_edges_max;
  cfg.tau_ceiling = wb::parse_scalar(o.tau);
  cfg.cost_max = wb::parse_scalar(o.cost_max);
  cfg.simple_share = o.simple_share;
  cfg.seed = o.seed;
  cfg.mode = wb::arith_mode_from_name(o.gen_mode);
  cfg.mc_spot_checks = o.mc_spot_checks;
  cfg.mc_walks = o.mc_walks;

  wb::Report rep = wb::run_campaign(cfg);

  if (!o.dump_dir.empty()) {
    std::filesystem::create_directories(o.dump_dir);
    for (int i = 0; i < cfg.count; ++i) {
      wb::Instance inst = wb::generate_instance(cfg, i);
      std::string text = "# " + inst.name + "\n# absorbing " +
                         inst.graph.label(inst.absorbing) + "\n" +
                         wb::emit_edge_list(inst.graph, &inst.weights, &inst.costs);
      deliver(text, (std::filesystem::path(o.dump_dir) / (inst.name + ".edges")).string());
    }
  }

  wb::ReportFormat fmt = wb::report_format_from_name(o.format_name);
  deliver(wb::emit_report(rep, fmt, !o.no_records), o.out_path);
  return rep.summary.pass ? 0 : 1;
}

int run_verify(const Options& o) {
  std::string text = slurp(o.report_path);
  wb::Report rep = wb::parse_report_json(text);

  std::vector<std::pair<std::string, std::string>> problems;  // (check, detail)
  auto expect = [&problems](bool ok, const std::string& check, const std::string& detail) {
    if (!ok) problems.emplace_back(check, detail);
  };

  bool any_records = false;
  for (const wb::InstanceRecord& r : rep.instances) any_records |= !r.bounds.records.empty();
  bool records_omitted = !any_records && rep.summary.records > 0;

  expect(static_cast<int>(rep.instances.size()) == rep.summary.instances, "instance-count",
         "summary says " + std::to_string(rep.summary.instances) + ", file holds " +
             std::to_string(rep.instances.size()));

  long long violations = 0, check_failures = 0, solver_failures = 0, records = 0;
  double max_residual = 0.0;
  for (const wb::InstanceRecord& r : rep.instances) {
    violations += r.bounds.violations;
    bool checks_ok = r.spot_check_ok;
    for (const wb::CrossCheck& c : r.checks) {
      check_failures += c.ok ? 0 : 1;
      checks_ok &= c.ok;
    }
    check_failures += r.spot_check_ok ? 0 : 1;
    solver_failures += static_cast<long long>(r.errors.size());
    records += static_cast<long long>(r.bounds.records.size());
    max_residual = std::max(max_residual, r.bounds.max_residual);

    bool pass = r.errors.empty() && r.bounds.violations == 0 && checks_ok;
    expect(pass == r.pass, "instance-pass-flag",
           r.name + ": recorded " + (r.pass ? "pass" : "fail") + ", recomputed " +
               (pass ? "pass" : "fail"));

    if (!r.bounds.records.empty()) {
      long long bad = 0;
      for (const wb::PairRecord& p : r.bounds.records) {
        if (!p.pass) ++bad;
        expect(p.slack == p.bound - p.exact, "record-slack",
               r.name + ": slack disagrees with bound - exact");
      }
      expect(bad == r.bounds.violations, "instance-violations",
             r.name + ": recorded " + std::to_string(r.bounds.violations) +
                 ", records show " + std::to_string(bad));
    }
  }

  expect(violations == rep.summary.bound_violations, "violation-total",
         "summary " + std::to_string(rep.summary.bound_violations) + ", instances sum to " +
             std::to_string(violations));
  expect(check_failures == rep.summary.check_failures, "check-failure-total",
         "summary " + std::to_string(rep.summary.check_failures) + ", instances sum to " +
             std::to_string(check_failures));
  expect(solver_failures == rep.summary.solver_failures, "solver-failure-total",
         "summary " + std::to_string(rep.summary.solver_failures) + ", instances sum to " +
             std::to_string(solver_failures));
  expect(max_residual == rep.summary.max_residual, "max-residual",
         "summary " + wb::format_double(rep.summary.max_residual) + ", instances give " +
             wb::format_double(max_residual));
  if (!records_omitted)
    expect(records == rep.summary.records, "record-total",
           "summary " + std::to_string(rep.summary.records) + ", instances sum to " +
               std::to_string(records));
  bool pass_flag = rep.summary.bound_violations == 0 && rep.summary.check_failures == 0 &&
                   rep.summary.solver_failures == 0;
  expect(pass_flag == rep.summary.pass, "summary-pass-flag",
         std::string("recorded ") + (rep.summary.pass ? "pass" : "fail") + ", recomputed " +
             (pass_flag ? "pass" : "fail"));

  bool canonical = wb::emit_report(rep, wb::ReportFormat::json, !records_omitted) == text;
  bool consistent = problems.empty();

  wb::ReportFormat fmt = pick_format(o.format_name, false);
  if (fmt == wb::ReportFormat::json) {
    Json j;
    j["version"] = rep.version;
    j["instances"] = rep.summary.instances;
    j["records_omitted"] = records_omitted;
    Json arr = Json::array();
    for (const auto& [check, detail] : problems) {
      Json row;
      row["check"] = check;
      row["detail"] = detail;
      arr.push_back(std::move(row));
    }
    j["problems"] = std::move(arr);
    j["canonical"] = canonical;
    j["consistent"] = consistent;
    j["campaign_pass"] = rep.summary.pass;
    deliver(j.dump(2) + "\n", o.out_path);
  } else {
    std::string out = "version: " + rep.version + "\n";
    out += "instances: " + std::to_string(rep.summary.instances) + "\n";
    out += "records: " + std::to_string(rep.summary.records) +
           (records_omitted ? " (omitted from file)" : "") + "\n";
    for (const auto& [check, detail] : problems)
      out += "INCONSISTENT " + check + ": " + detail + "\n";
    out += std::string("canonical json round-trip: ") + (canonical ? "yes" : "no") + "\n";
    out += std::string("internally consistent: ") + (consistent ? "yes" : "NO") + "\n";
    out += std::string("campaign result: ") + (rep.summary.pass ? "pass" : "FAIL") + "\n";
    deliver(out, o.out_path);
  }
  return (consistent && rep.summary.pass) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hitting times, visit counts, bound audits, and Monte Carlo tools for "
               "random walks on finite weighted graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wb::kVersion));
  Options o;

  auto add_graph = [&o](CLI::App* c) {
    c->add_option("--graph,-g", o.graph_path, "edge-list document: u v [weight [cost]]")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_mode = [&o](CLI::App* c) {
    c->add_option("--mode,-m", o.mode_name, "arithmetic: auto, rational, floating")
        ->check(CLI::IsMember({"auto", "rational", "floating", "float"}));
  };
  auto add_output = [&o](CLI::App* c, bool csv) {
    std::vector<std::string> forms = csv ? std::vector<std::string>{"text", "json", "csv"}
                                         : std::vector<std::string>{"text", "json"};
    c->add_option("--format,-f", o.format_name, "output format")->check(CLI::IsMember(forms));
    c->add_option("--out,-o", o.out_path, "write output to a file instead of stdout");
  };

  CLI::App* c_exact = app.add_subcommand(
      "exact", "expected steps (and costs) to absorption from every start vertex");
  add_graph(c_exact);
  c_exact->add_option("--target,-t", o.target_label, "absorbing vertex label")->required();
  c_exact->add_option("--costs,-c", o.costs_spec, "'unit', a cost file, or a numeric literal");
  add_mode(c_exact);
  add_output(c_exact, true);

  CLI::App* c_bounds = app.add_subcommand(
      "bounds", "audit every applicable hitting-time cap against exact solves");
  add_graph(c_bounds);
  c_bounds->add_option("--target,-t", o.target_labels,
                       "absorbing vertex label (repeatable; default all when n <= 64)");
  c_bounds->add_option("--costs,-c", o.costs_spec, "'unit', a cost file, or a numeric literal");
  add_mode(c_bounds);
  add_output(c_bounds, true);

  CLI::App* c_visits = app.add_subcommand(
      "visits", "expected visits to a vertex, or traversals of an edge, before absorption");
  add_graph(c_visits);
  c_visits->add_option("--target,-t", o.target_label, "absorbing vertex label")->required();
  CLI::Option* ov = c_visits->add_option("--vertex", o.vertex_label, "count visits to this vertex");
  CLI::Option* oe = c_visits->add_option("--edge", o.edge_labels,
                                         "count traversals of this edge (two labels)")
                        ->expected(2);
  ov->excludes(oe);
  oe->excludes(ov);
  add_mode(c_visits);
  add_output(c_visits, true);

  CLI::App* c_commute = app.add_subcommand(
      "commute", "round-trip time between two vertices, with the electric-network identity");
  add_graph(c_commute);
  c_commute->add_option("--source,-s", o.source_label, "first vertex label")->required();
  c_commute->add_option("--target,-t", o.target_label, "second vertex label")->required();
  add_mode(c_commute);
  add_output(c_commute, false);

  CLI::App* c_sim = app.add_subcommand(
      "simulate", "Monte Carlo estimate of steps (or cost) to absorption");
  add_graph(c_sim);
  c_sim->add_option("--target,-t", o.target_label, "absorbing vertex label")->required();
  c_sim->add_option("--start,-s", o.start_label, "start vertex label")->required();
  c_sim->add_option("--costs,-c", o.costs_spec, "'unit', a cost file, or a numeric literal");
  c_sim->add_option("--walks,-w", o.walks, "number of independent walks")
      ->check(CLI::PositiveNumber);
  c_sim->add_option("--seed", o.seed, "base seed; walk i uses substream (seed, i)");
  c_sim->add_option("--max-steps", o.max_steps, "per-walk step guard")
      ->check(CLI::PositiveNumber);
  add_mode(c_sim);
  add_output(c_sim, false);

  CLI::App* c_conn = app.add_subcommand(
      "connect", "one-sided randomized s-t connectivity via bounded random walks");
  add_graph(c_conn);
  c_conn->add_option("--source,-s", o.source_label, "start vertex label")->required();
  c_conn->add_option("--target,-t", o.target_label, "sought vertex label")->required();
  c_conn->add_option("--epsilon,-e", o.epsilon,
                     "false-negative probability bound, in (0, 1)");
  c_conn->add_option("--hitting-cap", o.walk_length,
                     "cap N on the expected hitting time; each repetition walks 2N steps "
                     "(default: m^2 for simple walks, F(tau, m) otherwise)")
      ->check(CLI::PositiveNumber);
  c_conn->add_option("--seed", o.seed, "base seed");
  add_output(c_conn, false);

  CLI::App* c_gen = app.add_subcommand(
      "generate", "run a seeded instance campaign: generate, audit, cross-check, report");
  c_gen->add_option("--family", o.family_name, "path, random-tree, random-connected, fixture")
      ->check(CLI::IsMember({"path", "random-tree", "random-connected", "fixture"}));
  c_gen->add_option("--count", o.count, "number of instances")->check(CLI::PositiveNumber);
  c_gen->add_option("--n-min", o.n_min, "smallest vertex count");
  c_gen->add_option("--n-max", o.n_max, "largest vertex count");
  c_gen->add_option("--extra-edges-max", o.extra_edges_max,
                    "random-connected: extra edges beyond the spanning tree");
  c_gen->add_option("--tau", o.tau, "weight asymmetry ceiling (1 = simple walks)");
  c_gen->add_option("--cost-max", o.cost_max, "costs drawn uniformly from [0, cost-max]");
  c_gen->add_option("--simple-share", o.simple_share,
                    "fraction of weighted-family instances forced to unit weights");
  c_gen->add_option("--seed", o.seed, "campaign seed; instance i uses substream (seed, i)");
  c_gen->add_option("--mode", o.gen_mode, "arithmetic: rational or floating")
      ->check(CLI::IsMember({"rational", "floating", "float"}));
  c_gen->add_flag("--mc-spot-checks", o.mc_spot_checks,
                  "Monte Carlo spot check one hitting time per instance");
  c_gen->add_option("--mc-walks", o.mc_walks, "walks per spot check")
      ->check(CLI::PositiveNumber);
  c_gen->add_flag("--no-records", o.no_records, "omit per-pair records from json output");
  c_gen->add_option("--dump-dir", o.dump_dir, "also write each instance as an edge-list file");
  c_gen->add_option("--format,-f", o.format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  c_gen->add_option("--out,-o", o.out_path, "write the report to a file instead of stdout");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "re-check a json campaign report for internal consistency");
  c_verify->add_option("--report,-r", o.report_path, "report file produced by generate")
      ->required()
      ->check(CLI::ExistingFile);
  add_output(c_verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_exact->parsed()) return run_exact(o);
    if (c_bounds->parsed()) return run_bounds(o);
    if (c_visits->parsed()) return run_visits(o);
    if (c_commute->parsed()) return run_commute(o);
    if (c_sim->parsed()) return run_simulate(o);
    if (c_conn->parsed()) return run_connect(o);
    if (c_gen->parsed()) return run_generate(o);
    if (c_verify->parsed()) return run_verify(o);
  } catch (const wb::Error& e) {
    std::cerr << "error [" << wb::errc_name(e.code()) << "]: " << e.what() << "\n";
    return (e.code() == wb::Errc::solve_failure || e.code() == wb::Errc::censored_sample) ? 1
                                                                                          : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
