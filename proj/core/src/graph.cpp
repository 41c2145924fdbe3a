#include "walkbound/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "walkbound/errors.hpp"

namespace walkbound {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ <= 0) fail(Errc::invalid_argument, "graph needs at least one vertex");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels_.size()) != n_)
    fail(Errc::invalid_argument, "label count does not match vertex count");

  std::set<std::pair<int, int>> seen;
  adj_.assign(n_, {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) fail(Errc::invalid_argument, "edge endpoint out of range");
    if (e.u == e.v)
      fail(Errc::self_loop, "self-loop at vertex '" + labels_[e.u] + "'");
    if (!seen.insert({e.u, e.v}).second)
      fail(Errc::duplicate_edge,
           "duplicate edge {" + labels_[e.u] + "," + labels_[e.v] + "}");
    adj_[e.u].push_back({e.v, static_cast<int>(i)});
    adj_[e.v].push_back({e.u, static_cast<int>(i)});
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  const auto& row = adj_[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>{v, -1});
  if (it != row.end() && it->first == v) return it->second;
  return -1;
}

int Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return -1;
}

bool Graph::connected() const {
  return static_cast<int>(component_of(0).size()) == n_;
}

std::vector<int> Graph::component_of(int v) const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{v}, out;
  seen[v] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (auto [y, e] : adj_[x]) {
      (void)e;
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

ArithMode harmonize(std::vector<Scalar>& values) {
  bool any_float = false;
  for (const Scalar& s : values)
    if (s.mode() == ArithMode::floating) any_float = true;
  if (any_float)
    for (Scalar& s : values) s = s.converted(ArithMode::floating);
  return any_float ? ArithMode::floating : ArithMode::rational;
}

}  // namespace

EdgeWeights::EdgeWeights(const Graph& g, std::vector<Scalar> weights) : EdgeWeights() {
  if (static_cast<int>(weights.size()) != g.edge_count())
    fail(Errc::invalid_argument, "weight count does not match edge count");
  w_ = std::move(weights);
  mode_ = harmonize(w_);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!(w_[e] > Scalar(0)))
      fail(Errc::non_positive_weight, "edge {" + g.label(g.edge(e).u) + "," +
                                          g.label(g.edge(e).v) + "} has weight " + w_[e].str());
}

EdgeWeights EdgeWeights::unit(const Graph& g) {
  EdgeWeights w;
  w.mode_ = ArithMode::rational;
  w.w_.assign(g.edge_count(), Scalar(1));
  return w;
}

EdgeWeights EdgeWeights::converted(ArithMode m) const {
  EdgeWeights out;
  out.mode_ = m;
  out.w_.reserve(w_.size());
  for (const Scalar& s : w_) out.w_.push_back(s.converted(m));
  return out;
}

bool EdgeWeights::is_unit() const {
  for (const Scalar& s : w_)
    if (s != Scalar(1)) return false;
  return true;
}

CostFunction::CostFunction(const Graph& g, std::vector<Scalar> costs) : CostFunction() {
  if (static_cast<int>(costs.size()) != g.edge_count())
    fail(Errc::invalid_argument, "cost count does not match edge count");
  f_ = std::move(costs);
  mode_ = harmonize(f_);
  for (int e = 0; e < g.edge_count(); ++e)
    if (f_[e] < Scalar(0))
      fail(Errc::negative_cost, "edge {" + g.label(g.edge(e).u) + "," + g.label(g.edge(e).v) +
                                    "} has cost " + f_[e].str());
}

CostFunction CostFunction::unit(const Graph& g) {
  CostFunction f;
  f.f_.assign(g.edge_count(), Scalar(1));
  return f;
}

CostFunction CostFunction::zero(const Graph& g) {
  CostFunction f;
  f.f_.assign(g.edge_count(), Scalar(0));
  return f;
}

CostFunction CostFunction::indicator(const Graph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) fail(Errc::invalid_argument, "edge index out of range");
  CostFunction f = zero(g);
  f.f_[edge] = Scalar(1);
  return f;
}

CostFunction CostFunction::converted(ArithMode m) const {
  CostFunction out;
  out.mode_ = m;
  out.f_.reserve(f_.size());
  for (const Scalar& s : f_) out.f_.push_back(s.converted(m));
  return out;
}

Scalar CostFunction::max() const {
  Scalar m(0);
  for (const Scalar& s : f_)
    if (s > m) m = s;
  return m;
}

WalkSpec::WalkSpec(Graph g, EdgeWeights w, int absorbing_vertex)
    : graph(std::move(g)), weights(std::move(w)), absorbing(absorbing_vertex) {
  if (absorbing < 0 || absorbing >= graph.vertex_count())
    fail(Errc::invalid_argument, "absorbing vertex out of range");
  if (weights.size() != graph.edge_count())
    fail(Errc::invalid_argument, "weights do not match graph");
}

std::vector<int> bfs_distances(const Graph& g, int a) {
  if (a < 0 || a >= g.vertex_count()) fail(Errc::invalid_argument, "vertex out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, e] : g.neighbors(x)) {
      (void)e;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

int edge_distance(const std::vector<int>& dist_from_a, const Edge& e) {
  int du = dist_from_a[e.u];
  int dv = dist_from_a[e.v];
  if (du < 0 && dv < 0) fail(Errc::unreachable, "edge lies outside the component of the target");
  if (du < 0) return dv;
  if (dv < 0) return du;
  return std::min(du, dv);
}

int edge_distance(const Graph& g, int a, const Edge& e) {
  return edge_distance(bfs_distances(g, a), e);
}

TransitionMatrix transition_probabilities(const Graph& g, const EdgeWeights& w, int absorbing,
                                          std::optional<ArithMode> mode) {
  if (w.size() != g.edge_count()) fail(Errc::invalid_argument, "weights do not match graph");
  ArithMode m = mode.value_or(w.mode());
  TransitionMatrix t;
  t.mode = m;
  t.rows.assign(g.vertex_count(), {});
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x == absorbing) continue;
    Scalar total(0);
    for (auto [y, e] : g.neighbors(x)) {
      (void)y;
      total += w[e].converted(m);
    }
    for (auto [y, e] : g.neighbors(x)) t.rows[x].push_back({y, w[e].converted(m) / total});
  }
  return t;
}

Scalar asymmetry(const Graph& g, const EdgeWeights& w) {
  if (w.size() != g.edge_count()) fail(Errc::invalid_argument, "weights do not match graph");
  Scalar tau(1);
  for (int x = 0; x < g.vertex_count(); ++x) {
    const auto& row = g.neighbors(x);
    if (row.size() < 2) continue;
    Scalar lo = w[row[0].second];
    Scalar hi = lo;
    for (size_t i = 1; i < row.size(); ++i) {
      const Scalar& s = w[row[i].second];
      if (s < lo) lo = s;
      if (s > hi) hi = s;
    }
    Scalar ratio = hi / lo;
    if (ratio > tau) tau = ratio;
  }
  return tau;
}

bool is_simple(const Graph& g, const EdgeWeights& w) { return asymmetry(g, w) == Scalar(1); }

}  // namespace walkbound
