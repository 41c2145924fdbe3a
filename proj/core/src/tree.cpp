#include "walkbound/tree.hpp"

#include <algorithm>

#include "walkbound/errors.hpp"

namespace walkbound {

int TreeStructure::child_toward(int x) const {
  if (x == root || x < 0 || x >= static_cast<int>(parent.size()))
    fail(Errc::invalid_argument, "need a non-root vertex");
  while (parent[x] != root) x = parent[x];
  return x;
}

int TreeStructure::tail_toward(int x) const { return tail[child_toward(x)] + 1; }

int TreeStructure::junction(int x, int u) const {
  // Climb the deeper vertex first, then both together.
  while (depth[x] > depth[u]) x = parent[x];
  while (depth[u] > depth[x]) u = parent[u];
  while (x != u) {
    x = parent[x];
    u = parent[u];
  }
  return x;
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && g.connected();
}

TreeStructure tree_structure(const Graph& g, int a) {
  if (a < 0 || a >= g.vertex_count()) fail(Errc::invalid_argument, "vertex out of range");
  if (!is_tree(g)) fail(Errc::not_a_tree, "graph is not a tree");
  const int n = g.vertex_count();
  TreeStructure t;
  t.root = a;
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  t.subtree_size.assign(n, 1);
  t.tail.assign(n, 0);

  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{a};
  std::vector<char> seen(n, 0);
  seen[a] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (auto [y, e] : g.neighbors(x)) {
      (void)e;
      if (!seen[y]) {
        seen[y] = 1;
        t.parent[y] = x;
        t.depth[y] = t.depth[x] + 1;
        stack.push_back(y);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (t.parent[*it] >= 0) t.subtree_size[t.parent[*it]] += t.subtree_size[*it];
  for (int v = 0; v < n; ++v) t.tail[v] = t.subtree_size[v] - 1;
  return t;
}

namespace {

void require_simple(const WalkSpec& spec) {
  if (!is_simple(spec.graph, spec.weights))
    fail(Errc::not_simple_walk, "closed forms need the uniform-neighbor walk");
}

}  // namespace

SolveResult tree_hitting_times(const WalkSpec& spec) {
  require_simple(spec);
  TreeStructure t = tree_structure(spec.graph, spec.absorbing);
  const int n = spec.graph.vertex_count();
  SolveResult out;
  out.kind = ResultKind::hitting;
  out.mode = ArithMode::rational;
  out.values.assign(n, Scalar(0));
  // Parents are always finished before children in BFS-from-root order.
  std::vector<int> by_depth(n);
  for (int v = 0; v < n; ++v) by_depth[v] = v;
  std::sort(by_depth.begin(), by_depth.end(),
            [&](int x, int y) { return t.depth[x] < t.depth[y]; });
  for (int v : by_depth) {
    if (v == t.root) continue;
    out.values[v] = out.values[t.parent[v]] + Scalar(2 * t.tail[v] + 1);
  }
  return out;
}

SolveResult tree_visit_counts(const WalkSpec& spec, int x) {
  require_simple(spec);
  if (x == spec.absorbing)
    fail(Errc::invalid_argument, "visit counts are defined for non-absorbing vertices");
  TreeStructure t = tree_structure(spec.graph, spec.absorbing);
  const int n = spec.graph.vertex_count();
  SolveResult out;
  out.kind = ResultKind::vertex_visits;
  out.mode = ArithMode::rational;
  out.values.assign(n, Scalar(0));
  int deg = spec.graph.degree(x);
  for (int u = 0; u < n; ++u) out.values[u] = Scalar(t.depth[t.junction(x, u)] * deg);
  return out;
}

}  // namespace walkbound
