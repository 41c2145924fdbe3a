#include "walkbound/campaign.hpp"

#include <algorithm>
#include <cmath>

#include "walkbound/errors.hpp"
#include "walkbound/solver.hpp"
#include "walkbound/threads.hpp"
#include "walkbound/tree.hpp"
#include "walkbound/version.hpp"

namespace walkbound {

namespace {

bool values_close(const Scalar& a, const Scalar& b, ArithMode mode) {
  if (mode == ArithMode::rational) return a == b;
  double x = a.to_double(), y = b.to_double();
  return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
}

int farthest_vertex(const Graph& g, int from) {
  std::vector<int> dist = bfs_distances(g, from);
  int best = from;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] > dist[best]) best = v;
  return best;
}

InstanceRecord run_instance(const CampaignConfig& cfg, int index) {
  InstanceRecord rec;
  rec.index = index;
  rec.checks.reserve(8);  // returned references must outlive later push_backs
  auto check = [&rec](const std::string& name) -> CrossCheck& {
    rec.checks.push_back(CrossCheck{name, false, true, ""});
    return rec.checks.back();
  };

  try {
    Instance inst = generate_instance(cfg, index);
    rec.name = inst.name;
    rec.family = instance_family_name(inst.family);
    rec.n = inst.graph.vertex_count();
    rec.m = inst.graph.edge_count();

    const Graph& g = inst.graph;
    EdgeWeights w = inst.weights.converted(cfg.mode);
    CostFunction f = inst.costs.converted(cfg.mode);

    rec.bounds = audit(g, w, f, {}, cfg.mode);
    rec.tau = rec.bounds.tau;
    rec.simple = rec.bounds.simple;
    rec.tree = rec.bounds.tree;

    const int a = inst.absorbing;
    LaplacianSystem sys(WalkSpec(g, w, a), cfg.mode);
    SolveResult hit = sys.hitting_times();

    {
      CrossCheck& c = check("fixture-profile");
      if (inst.expected_hitting) {
        c.applicable = true;
        for (int v = 0; v < rec.n; ++v)
          if (!values_close(hit.values[v], (*inst.expected_hitting)[v], cfg.mode)) {
            c.ok = false;
            c.detail = "vertex " + g.label(v) + ": got " + hit.values[v].str() + ", expected " +
                       (*inst.expected_hitting)[v].str();
            break;
          }
      }
    }

    if (rec.tree && rec.simple) {
      CrossCheck& c = check("tree-closed-form");
      c.applicable = true;
      SolveResult fast = tree_hitting_times(WalkSpec(g, w, a));
      for (int v = 0; v < rec.n && c.ok; ++v)
        if (!values_close(hit.values[v], fast.values[v], cfg.mode)) {
          c.ok = false;
          c.detail = "vertex " + g.label(v) + ": dense " + hit.values[v].str() + " vs closed " +
                     fast.values[v].str();
        }

      CrossCheck& cv = check("tree-visit-closed-form");
      cv.applicable = true;
      int x = (a + 1) % rec.n;
      SolveResult dense_visits = sys.vertex_visit_counts(x);
      SolveResult fast_visits = tree_visit_counts(WalkSpec(g, w, a), x);
      for (int v = 0; v < rec.n && cv.ok; ++v)
        if (!values_close(dense_visits.values[v], fast_visits.values[v], cfg.mode)) {
          cv.ok = false;
          cv.detail = "visits to " + g.label(x) + " from " + g.label(v) + ": dense " +
                      dense_visits.values[v].str() + " vs closed " + fast_visits.values[v].str();
        }
    }

    if (rec.simple) {
      // Summing H over the target's neighbors counts every edge twice except
      // the target's own: 2m - deg(a), exact on every connected graph.
      CrossCheck& c = check("neighbor-hitting-sum");
      c.applicable = true;
      Scalar sum(0);
      for (auto [z, e] : g.neighbors(a)) {
        (void)e;
        sum += hit.values[z];
      }
      Scalar expected(2LL * rec.m - g.degree(a));
      if (!values_close(sum, expected, cfg.mode)) {
        c.ok = false;
        c.detail = "sum " + sum.str() + " vs " + expected.str();
      }
    }

    {
      CrossCheck& c = check("commute-resistance-identity");
      c.applicable = true;
      int u = farthest_vertex(g, a);
      if (u == a) u = (a + 1) % rec.n;
      Scalar commute = commute_time(g, w, u, a, cfg.mode);
      Scalar product =
          network_total_conductance(w).converted(cfg.mode) * effective_resistance(g, w, u, a, cfg.mode);
      if (!values_close(commute, product, cfg.mode)) {
        c.ok = false;
        c.detail = "commute " + commute.str() + " vs conductance*resistance " + product.str();
      }
    }

    {
      CrossCheck& c = check("edge-visit-decomposition");
      c.applicable = true;
      int limit = std::min(rec.m, 16);
      for (int e = 0; e < limit && c.ok; ++e) {
        SolveResult direct = sys.edge_visit_counts(e);
        SolveResult viaCost = sys.cost_hitting_times(CostFunction::indicator(g, e));
        for (int v = 0; v < rec.n && c.ok; ++v)
          if (!values_close(direct.values[v], viaCost.values[v], cfg.mode)) {
            c.ok = false;
            c.detail = "edge " + std::to_string(e) + " from " + g.label(v) + ": " +
                       direct.values[v].str() + " vs " + viaCost.values[v].str();
          }
      }
    }

    if (cfg.mc_spot_checks) {
      int start = farthest_vertex(g, a);
      if (start != a) {
        EstimateSummary est = estimate_hitting(WalkSpec(g, w, a), nullptr, start, cfg.mc_walks,
                                               substream_seed(cfg.seed ^ 0x5eedULL, index));
        rec.spot_check = est;
        double exact = hit.values[start].to_double();
        double slack = 4.0 * est.halfwidth + 1e-6;
        rec.spot_check_ok = std::abs(est.mean - exact) <= slack;
      }
    }
  } catch (const Error& e) {
    rec.errors.push_back(e.what());
  }

  bool checks_ok = rec.spot_check_ok;
  for (const CrossCheck& c : rec.checks) checks_ok &= c.ok;
  rec.pass = rec.errors.empty() && rec.bounds.pass && checks_ok;
  return rec;
}

}  // namespace

Report run_campaign(const CampaignConfig& config) {
  Report rep;
  rep.version = kVersion;
  rep.config = config;
  rep.instances.resize(config.count);
  parallel_for(config.count, [&](long long begin, long long end) {
    for (long long i = begin; i < end; ++i)
      rep.instances[i] = run_instance(config, static_cast<int>(i));
  });

  auto& s = rep.summary;
  s.instances = config.count;
  for (const InstanceRecord& rec : rep.instances) {
    s.records += static_cast<long long>(rec.bounds.records.size());
    s.bound_violations += rec.bounds.violations;
    for (const CrossCheck& c : rec.checks) s.check_failures += c.ok ? 0 : 1;
    s.check_failures += rec.spot_check_ok ? 0 : 1;
    s.solver_failures += static_cast<long long>(rec.errors.size());
    s.max_residual = std::max(s.max_residual, rec.bounds.max_residual);
  }
  s.pass = s.bound_violations == 0 && s.check_failures == 0 && s.solver_failures == 0;
  return rep;
}

}  // namespace walkbound
