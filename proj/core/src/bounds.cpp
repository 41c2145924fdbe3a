#include "walkbound/bounds.hpp"

#include <cmath>

#include "walkbound/errors.hpp"
#include "walkbound/solver.hpp"
#include "walkbound/tree.hpp"

namespace walkbound {

Scalar poly_P(const Scalar& t, int m) {
  if (m < 1) fail(Errc::invalid_argument, "poly_P needs m >= 1");
  // 1 + 2t(1 + t(1 + ...)) with m-1 nested factors.
  Scalar geo(0);
  for (int k = 0; k < m - 1; ++k) geo = t * (geo + Scalar(1));
  return Scalar(2) * geo + Scalar(1);
}

Scalar poly_F(const Scalar& t, int m) {
  if (m < 0) fail(Errc::invalid_argument, "poly_F needs m >= 0");
  if (m == 0) return Scalar(0);
  Scalar acc(0);
  for (int k = m - 1; k >= 1; --k) acc = acc * t + Scalar(2 * (m - k));
  return acc * t + Scalar(m);
}

Scalar bound_simple_distance(int m, int d) {
  if (d < 1 || d > m) fail(Errc::invalid_argument, "need 1 <= d <= m");
  BigInt mm(m), rest(m - d);
  return Scalar(Rational(mm * mm - rest * rest));
}

Scalar bound_tree_tail(int ell_a, int ell_x) {
  if (ell_x < 0 || ell_x >= ell_a) fail(Errc::invalid_argument, "need 0 <= ell_x < ell_a");
  BigInt la(ell_a), lx(ell_x);
  return Scalar(Rational(la * la - lx * lx));
}

CostBound bound_cost_simple(const Graph& g, int a, const CostFunction& f) {
  if (f.size() != g.edge_count()) fail(Errc::invalid_argument, "costs do not match graph");
  std::vector<int> dist = bfs_distances(g, a);
  Scalar refined(0);
  for (int e = 0; e < g.edge_count(); ++e)
    refined += Scalar(2 * edge_distance(dist, g.edge(e)) + 1) * f[e];
  long long m = g.edge_count();
  Scalar coarse = Scalar(m * m) * f.max();
  return CostBound{refined, coarse};
}

Scalar bound_weighted_F(const Scalar& tau, int m) { return poly_F(tau, m); }

Scalar bound_main(const Graph& g, const EdgeWeights& w, const CostFunction& f, int a) {
  if (f.size() != g.edge_count()) fail(Errc::invalid_argument, "costs do not match graph");
  Scalar tau = asymmetry(g, w);
  std::vector<int> dist = bfs_distances(g, a);
  Scalar total(0);
  for (int e = 0; e < g.edge_count(); ++e)
    total += poly_P(tau, edge_distance(dist, g.edge(e)) + 1) * f[e];
  return total;
}

Scalar bound_coarse(const Scalar& tau, int m) {
  if (m < 1) fail(Errc::invalid_argument, "need m >= 1");
  long long mm = m;
  return Scalar(mm * mm) * pow(tau, static_cast<unsigned>(m - 1));
}

Scalar directional_asymmetry(const Graph& g, const EdgeWeights& w, int a) {
  TreeStructure t = tree_structure(g, a);
  Scalar out(1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == a) continue;
    const Scalar& toward = w[g.edge_index(v, t.parent[v])];
    for (auto [y, e] : g.neighbors(v)) {
      if (y == t.parent[v]) continue;
      Scalar ratio = w[e] / toward;
      if (ratio > out) out = ratio;
    }
  }
  return out;
}

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::hitting_distance: return "hitting-distance";
    case BoundKind::hitting_tail: return "hitting-tail";
    case BoundKind::hitting_poly: return "hitting-poly";
    case BoundKind::hitting_poly_tree: return "hitting-poly-tree";
    case BoundKind::hitting_coarse: return "hitting-coarse";
    case BoundKind::cost_distance: return "cost-distance";
    case BoundKind::cost_max: return "cost-max";
    case BoundKind::cost_poly: return "cost-poly";
  }
  return "bound";
}

BoundKind bound_kind_from_name(const std::string& name) {
  for (BoundKind k : {BoundKind::hitting_distance, BoundKind::hitting_tail, BoundKind::hitting_poly,
                      BoundKind::hitting_poly_tree, BoundKind::hitting_coarse,
                      BoundKind::cost_distance, BoundKind::cost_max, BoundKind::cost_poly})
    if (name == bound_kind_name(k)) return k;
  fail(Errc::invalid_argument, "unknown bound kind '" + name + "'");
}

namespace {

bool record_pass(const Scalar& slack, const Scalar& bound, ArithMode mode) {
  if (mode == ArithMode::rational) return slack >= Scalar(0);
  Scalar tol = Scalar::floating(1e-9 * std::max(1.0, std::abs(bound.to_double())));
  return slack >= -tol;
}

}  // namespace

BoundReport audit(const Graph& g, const EdgeWeights& w, const CostFunction& f,
                  std::optional<std::vector<int>> targets_opt, std::optional<ArithMode> mode_opt) {
  if (!g.connected()) fail(Errc::unreachable, "audit needs a connected graph");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  ArithMode mode = mode_opt.value_or(default_mode(n));

  std::vector<int> targets;
  if (targets_opt) {
    targets = *targets_opt;
    for (int a : targets)
      if (a < 0 || a >= n) fail(Errc::invalid_argument, "target out of range");
  } else if (n <= 64) {
    targets.resize(n);
    for (int v = 0; v < n; ++v) targets[v] = v;
  } else {
    fail(Errc::invalid_argument, "graphs beyond 64 vertices need explicit audit targets");
  }

  EdgeWeights wm = w.converted(mode);
  CostFunction fm = f.converted(mode);

  BoundReport rep;
  rep.tau = asymmetry(g, wm);
  rep.simple = rep.tau == Scalar(1);
  rep.tree = is_tree(g);
  rep.max_hitting = Scalar(0);

  Scalar f_tau_m = bound_weighted_F(rep.tau, m);
  Scalar coarse = m >= 1 ? bound_coarse(rep.tau, m) : Scalar(0);

  for (int a : targets) {
    LaplacianSystem sys(WalkSpec(g, wm, a), mode);
    SolveResult hit = sys.hitting_times();
    SolveResult cost = sys.cost_hitting_times(fm);
    rep.max_residual = std::max({rep.max_residual, hit.residual, cost.residual});
    std::vector<int> dist = bfs_distances(g, a);

    CostBound cb{Scalar(0), Scalar(0)};
    if (rep.simple) cb = bound_cost_simple(g, a, fm);
    Scalar cost_poly(0);
    for (int e = 0; e < m; ++e)
      cost_poly += poly_P(rep.tau, edge_distance(dist, g.edge(e)) + 1) * fm[e];

    TreeStructure ts;
    Scalar f_dir(0);
    if (rep.tree) {
      ts = tree_structure(g, a);
      f_dir = bound_weighted_F(directional_asymmetry(g, wm, a), m);
    }

    for (int x = 0; x < n; ++x) {
      if (x == a) continue;
      const Scalar& hx = hit.values[x];
      const Scalar& cx = cost.values[x];
      if (hx > rep.max_hitting) rep.max_hitting = hx;

      auto push = [&](BoundKind kind, const Scalar& exact, const Scalar& bound) {
        PairRecord r;
        r.source = x;
        r.target = a;
        r.kind = kind;
        r.exact = exact;
        r.bound = bound;
        r.slack = bound - exact;
        r.pass = record_pass(r.slack, bound, mode);
        if (!r.pass) ++rep.violations;
        rep.records.push_back(std::move(r));
      };

      if (rep.simple) push(BoundKind::hitting_distance, hx, bound_simple_distance(m, dist[x]));
      if (rep.simple && rep.tree)
        push(BoundKind::hitting_tail, hx, bound_tree_tail(ts.tail_toward(x), ts.tail[x]));
      push(BoundKind::hitting_poly, hx, f_tau_m);
      if (rep.tree) push(BoundKind::hitting_poly_tree, hx, f_dir);
      if (m >= 1) push(BoundKind::hitting_coarse, hx, coarse);
      if (rep.simple) {
        push(BoundKind::cost_distance, cx, cb.refined);
        push(BoundKind::cost_max, cx, cb.coarse);
      }
      push(BoundKind::cost_poly, cx, cost_poly);
    }
  }

  Scalar msq(static_cast<long long>(m) * m);
  if (mode == ArithMode::rational) {
    rep.sharp = rep.max_hitting == msq;
  } else {
    double diff = std::abs(rep.max_hitting.to_double() - msq.to_double());
    rep.sharp = diff <= 1e-9 * std::max(1.0, msq.to_double());
  }
  rep.pass = rep.violations == 0;
  return rep;
}

}  // namespace walkbound
