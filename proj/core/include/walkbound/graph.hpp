#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkbound/scalar.hpp"

namespace walkbound {

// Undirected edge; stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph. Vertices are dense ids 0..n-1; original
// parse-time labels ride along in a sidecar. Immutable after construction.
class Graph {
 public:
  // Validates: ids in range, no self-loops, no duplicate edges.
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Sorted (neighbor, edge index) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int edge_index(int u, int v) const;  // -1 when {u,v} is not an edge

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int vertex_by_label(const std::string& label) const;  // -1 when absent

  bool connected() const;
  std::vector<int> component_of(int v) const;  // sorted vertex list

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<std::string> labels_;
};

// Strictly positive per-edge weights, parallel to g.edges(). A single mode
// governs all entries; mixing rational and floating inputs floats everything.
class EdgeWeights {
 public:
  EdgeWeights(const Graph& g, std::vector<Scalar> weights);
  static EdgeWeights unit(const Graph& g);  // simple walk: all weights 1

  int size() const { return static_cast<int>(w_.size()); }
  const Scalar& operator[](int edge) const { return w_[edge]; }
  ArithMode mode() const { return mode_; }
  EdgeWeights converted(ArithMode m) const;
  bool is_unit() const;

 private:
  EdgeWeights() : mode_(ArithMode::rational) {}
  ArithMode mode_;
  std::vector<Scalar> w_;
};

// Nonnegative per-edge costs, parallel to g.edges(). Cost of a walk is the
// sum of f over traversed edges with multiplicity.
class CostFunction {
 public:
  CostFunction(const Graph& g, std::vector<Scalar> costs);
  static CostFunction unit(const Graph& g);
  static CostFunction zero(const Graph& g);
  // Indicator of one edge: 1 on e, 0 elsewhere. Cost-hitting against it
  // counts expected traversals of e.
  static CostFunction indicator(const Graph& g, int edge);

  int size() const { return static_cast<int>(f_.size()); }
  const Scalar& operator[](int edge) const { return f_[edge]; }
  ArithMode mode() const { return mode_; }
  CostFunction converted(ArithMode m) const;
  Scalar max() const;  // 0 for edgeless graphs

 private:
  CostFunction() : mode_(ArithMode::rational) {}
  ArithMode mode_;
  std::vector<Scalar> f_;
};

// A random walk instance: graph, weights, one absorbing vertex. The walk
// steps from x to neighbor y with probability w(x,y) / sum_z w(x,z) and stops
// at the absorbing vertex.
struct WalkSpec {
  WalkSpec(Graph g, EdgeWeights w, int absorbing_vertex);

  Graph graph;
  EdgeWeights weights;
  int absorbing;
};

// BFS edge-count distances from `a`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int a);

// Distance of an edge from `a`: min over the two endpoint distances.
// Unreachable if neither endpoint reaches a.
int edge_distance(const Graph& g, int a, const Edge& e);
int edge_distance(const std::vector<int>& dist_from_a, const Edge& e);

// Row-stochastic transition table. rows[x] holds sorted (neighbor, p_xy);
// the absorbing row (if any) is empty.
struct TransitionMatrix {
  ArithMode mode;
  std::vector<std::vector<std::pair<int, Scalar>>> rows;
};

TransitionMatrix transition_probabilities(const Graph& g, const EdgeWeights& w,
                                          int absorbing = -1,
                                          std::optional<ArithMode> mode = {});

// Largest ratio between two weights incident to a common vertex; 1 on graphs
// with no vertex of degree >= 2 (single vertex included). Always >= 1; equals
// 1 exactly when the walk is simple.
Scalar asymmetry(const Graph& g, const EdgeWeights& w);

// True when every step distribution is uniform over neighbors.
bool is_simple(const Graph& g, const EdgeWeights& w);

}  // namespace walkbound
