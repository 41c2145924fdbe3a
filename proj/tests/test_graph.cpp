#include <doctest.h>

#include "helpers.hpp"
#include "walkbound/errors.hpp"
#include "walkbound/graph.hpp"

using namespace walkbound;
using testutil::make_path;
using testutil::thrown_code;

TEST_CASE("graph construction validates its edge list") {
  CHECK(thrown_code([] { Graph(0, {}); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { Graph(2, {{0, 2}}); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { Graph(2, {{1, 1}}); }) == Errc::self_loop);
  CHECK(thrown_code([] { Graph(3, {{0, 1}, {1, 0}}); }) == Errc::duplicate_edge);
  CHECK(thrown_code([] { Graph(2, {{0, 1}}, {"a"}); }) == Errc::invalid_argument);
}

TEST_CASE("adjacency is sorted and edges are normalized") {
  Graph g(4, {{2, 0}, {0, 1}, {3, 0}});
  CHECK(g.edge(0).u == 0);  // stored with u < v
  CHECK(g.edge(0).v == 2);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(3) == 1);
  const auto& nb = g.neighbors(0);
  CHECK(nb.size() == 3);
  CHECK(nb[0].first == 1);
  CHECK(nb[1].first == 2);
  CHECK(nb[2].first == 3);
  CHECK(g.edge_index(0, 2) == 0);
  CHECK(g.edge_index(2, 0) == 0);
  CHECK(g.edge_index(1, 2) == -1);
}

TEST_CASE("default labels are dense ids, lookups work both ways") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.label(0) == "0");
  CHECK(g.label(2) == "2");
  CHECK(g.vertex_by_label("1") == 1);
  CHECK(g.vertex_by_label("x") == -1);
  Graph named(2, {{0, 1}}, {"left", "right"});
  CHECK(named.vertex_by_label("right") == 1);
}

TEST_CASE("connectivity and components") {
  Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK_FALSE(g.connected());
  CHECK(g.component_of(1) == std::vector<int>{0, 1, 2});
  CHECK(g.component_of(4) == std::vector<int>{3, 4});
  CHECK(make_path(4).connected());
}

TEST_CASE("edge weights validate positivity and count") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(thrown_code([&] { EdgeWeights(g, {Scalar(1)}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { EdgeWeights(g, {Scalar(1), Scalar(0)}); }) ==
        Errc::non_positive_weight);
  CHECK(thrown_code([&] { EdgeWeights(g, {Scalar(1), Scalar(-2)}); }) ==
        Errc::non_positive_weight);
  EdgeWeights w = EdgeWeights::unit(g);
  CHECK(w.is_unit());
  CHECK(w.size() == 2);
  CHECK(w[1] == Scalar(1));
}

TEST_CASE("a floating entry floats the whole weight vector") {
  Graph g(3, {{0, 1}, {1, 2}});
  EdgeWeights w(g, {Scalar(2), Scalar::floating(0.5)});
  CHECK(w.mode() == ArithMode::floating);
  CHECK(w[0].mode() == ArithMode::floating);
  CHECK(w[0].to_double() == 2.0);
  CHECK_FALSE(w.is_unit());
}

TEST_CASE("cost functions allow zero but not negative costs") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(thrown_code([&] { CostFunction(g, {Scalar(0), Scalar(-1)}); }) == Errc::negative_cost);
  CostFunction f(g, {Scalar(0), Scalar(Rational(5, 2))});
  CHECK(f.max() == Scalar(Rational(5, 2)));
  CostFunction ind = CostFunction::indicator(g, 1);
  CHECK(ind[0] == Scalar(0));
  CHECK(ind[1] == Scalar(1));
  CHECK(CostFunction::zero(g).max() == Scalar(0));
}

TEST_CASE("bfs distances and edge distances") {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});  // vertex 5 isolated
  std::vector<int> dist = bfs_distances(g, 0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3, 1, -1});
  CHECK(edge_distance(g, 0, g.edge(g.edge_index(2, 3))) == 2);
  CHECK(edge_distance(g, 0, g.edge(g.edge_index(0, 4))) == 0);
  Graph h(4, {{0, 1}, {2, 3}});
  CHECK(thrown_code([&] { edge_distance(h, 0, h.edge(1)); }) == Errc::unreachable);
}

TEST_CASE("transition rows are stochastic and the absorbing row is empty") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  EdgeWeights w(g, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
  TransitionMatrix t = transition_probabilities(g, w, 0);
  CHECK(t.rows[0].empty());
  for (int x = 1; x < 4; ++x) {
    Scalar sum(0);
    for (auto& [y, p] : t.rows[x]) {
      (void)y;
      sum += p;
    }
    CHECK(sum == Scalar(1));
  }
  // p_{1,2} = 2 / (1+2+3).
  for (auto& [y, p] : t.rows[1])
    if (y == 2) CHECK(p == Scalar(Rational(1, 3)));
}

TEST_CASE("asymmetry is a max of incident ratios and is scale invariant") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  EdgeWeights w(g, {Scalar(1), Scalar(3), Scalar(2)});
  CHECK(asymmetry(g, w) == Scalar(3));
  EdgeWeights scaled(g, {Scalar(5), Scalar(15), Scalar(10)});
  CHECK(asymmetry(g, scaled) == Scalar(3));
  CHECK(asymmetry(g, EdgeWeights::unit(g)) == Scalar(1));
  CHECK(is_simple(g, EdgeWeights::unit(g)));
  CHECK_FALSE(is_simple(g, w));
  // No vertex of degree >= 2: ratios are all trivial.
  Graph single(2, {{0, 1}});
  EdgeWeights wild(single, {Scalar(17)});
  CHECK(asymmetry(single, wild) == Scalar(1));
  CHECK(is_simple(single, wild));
}

TEST_CASE("walk spec validates the absorbing vertex") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(thrown_code([&] { WalkSpec(g, EdgeWeights::unit(g), 3); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { WalkSpec(g, EdgeWeights::unit(g), -1); }) == Errc::invalid_argument);
  WalkSpec ok(g, EdgeWeights::unit(g), 2);
  CHECK(ok.absorbing == 2);
}
