#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "walkbound/bounds.hpp"
#include "walkbound/errors.hpp"
#include "walkbound/generate.hpp"
#include "walkbound/solver.hpp"

using namespace walkbound;
using testutil::make_path;
using testutil::thrown_code;

namespace {

// Closed forms kept here as an oracle for the Horner evaluations:
// P(t,m) = 2(t^m - 1)/(t - 1) - 1,  F(t,m) = (2t^{m+1} - mt^2 - 2t + m)/(t-1)^2.
Scalar closed_P(const Scalar& t, int m) {
  Scalar one(1);
  return Scalar(2) * (pow(t, static_cast<unsigned>(m)) - one) / (t - one) - one;
}

Scalar closed_F(const Scalar& t, int m) {
  Scalar num = Scalar(2) * pow(t, static_cast<unsigned>(m + 1)) - Scalar(m) * t * t -
               Scalar(2) * t + Scalar(m);
  return num / ((t - Scalar(1)) * (t - Scalar(1)));
}

}  // namespace

TEST_CASE("polynomial spot values") {
  CHECK(poly_P(Scalar(2), 3) == Scalar(13));
  CHECK(poly_F(Scalar(2), 3) == Scalar(19));
  CHECK(poly_P(Scalar(1), 1) == Scalar(1));
  CHECK(poly_F(Scalar(2), 0) == Scalar(0));
  for (int m = 1; m <= 100; ++m) {
    CHECK(poly_F(Scalar(1), m) == Scalar(m * m));
    CHECK(poly_P(Scalar(1), m) == Scalar(2 * m - 1));
  }
}

TEST_CASE("Horner evaluation matches the closed forms exactly") {
  for (const Scalar& t : {Scalar(Rational(3, 2)), Scalar(2), Scalar(3), Scalar(Rational(7, 3))})
    for (int m = 1; m <= 40; ++m) {
      CHECK(poly_P(t, m) == closed_P(t, m));
      CHECK(poly_F(t, m) == closed_F(t, m));
    }
  // Floating evaluation stays within 1e-12 relative of the closed form.
  for (double t : {1.5, 2.0, 2.75})
    for (int m = 1; m <= 30; ++m) {
      double horner = poly_F(Scalar::floating(t), m).to_double();
      double closed = closed_F(Scalar::floating(t), m).to_double();
      CHECK(std::abs(horner - closed) <= 1e-12 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("polynomial recurrences and sums hold exactly") {
  for (const Scalar& t : {Scalar(0), Scalar(Rational(1, 2)), Scalar(1), Scalar(Rational(3, 2)),
                          Scalar(2), Scalar(3)}) {
    Scalar sum(0);
    for (int m = 1; m <= 25; ++m) {
      sum += poly_P(t, m);
      CHECK(poly_F(t, m) == sum);                                 // F = sum of P
      CHECK(poly_P(t, m + 1) == t * poly_P(t, m) + t + Scalar(1));  // P recurrence
    }
  }
  for (const Scalar& t : {Scalar(1), Scalar(Rational(3, 2)), Scalar(2), Scalar(3)})
    for (int a = 1; a <= 20; ++a)
      for (int b = 1; b <= 20; ++b)
        CHECK(poly_P(t, a + b) >= poly_P(t, a) + poly_P(t, b) + Scalar(1));
}

TEST_CASE("polynomials are positive and monotone on the grid") {
  std::vector<Scalar> grid = {Scalar(0), Scalar(Rational(1, 2)), Scalar(1),
                              Scalar(Rational(3, 2)), Scalar(2), Scalar(3)};
  for (size_t i = 0; i < grid.size(); ++i)
    for (int m = 1; m <= 25; ++m) {
      CHECK(poly_P(grid[i], m) > Scalar(0));
      CHECK(poly_F(grid[i], m) > Scalar(0));
      CHECK(poly_P(grid[i], m + 1) >= poly_P(grid[i], m));
      CHECK(poly_F(grid[i], m + 1) > poly_F(grid[i], m));
      if (i + 1 < grid.size()) {
        CHECK(poly_P(grid[i + 1], m) >= poly_P(grid[i], m));
        CHECK(poly_F(grid[i + 1], m) >= poly_F(grid[i], m));
      }
    }
}

TEST_CASE("square-difference bounds and their preconditions") {
  CHECK(bound_simple_distance(3, 1) == Scalar(5));
  CHECK(bound_simple_distance(3, 3) == Scalar(9));
  CHECK(bound_simple_distance(50, 50) == Scalar(2500));
  CHECK(thrown_code([] { bound_simple_distance(3, 0); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { bound_simple_distance(3, 4); }) == Errc::invalid_argument);

  CHECK(bound_tree_tail(2, 0) == Scalar(4));
  CHECK(bound_tree_tail(5, 3) == Scalar(16));
  CHECK(thrown_code([] { bound_tree_tail(2, 2); }) == Errc::invalid_argument);
}

TEST_CASE("simple cost bound sums 2d+1 over edges") {
  // Pendant triangle: edge distance profile {0, 1, 1, 2} gives sum 12.
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  CostBound cb = bound_cost_simple(g, 0, CostFunction::unit(g));
  CHECK(cb.refined == Scalar(12));
  CHECK(cb.coarse == Scalar(16));  // m^2 max f

  // The refined form weights each edge cost by 2 d_a(e) + 1.
  std::vector<Scalar> f = {Scalar(2), Scalar(0), Scalar(1), Scalar(Rational(1, 2))};
  CostBound weighted = bound_cost_simple(g, 0, CostFunction(g, f));
  CHECK(weighted.refined == Scalar(2) + Scalar(3) + Scalar(Rational(5, 2)));
  CHECK(weighted.coarse == Scalar(32));
}

TEST_CASE("the main weighted cost bound reduces to 2d+1 when tau is 1") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  CostFunction f = CostFunction::unit(g);
  CHECK(bound_main(g, EdgeWeights::unit(g), f, 0) ==
        bound_cost_simple(g, 0, f).refined);
}

TEST_CASE("coarse bound dominates F on tau >= 1") {
  for (const Scalar& t : {Scalar(1), Scalar(Rational(3, 2)), Scalar(2), Scalar(3)})
    for (int m = 1; m <= 25; ++m) CHECK(bound_coarse(t, m) >= bound_weighted_F(t, m));
  CHECK(bound_coarse(Scalar(1), 7) == Scalar(49));
}

TEST_CASE("directional asymmetry floors ratios at one") {
  Graph p = make_path(2);  // 0-1-2, rooted at 0
  // Weights decrease away from the root: every away/toward ratio is < 1.
  EdgeWeights towards(p, {Scalar(3), Scalar(1)});
  CHECK(directional_asymmetry(p, towards, 0) == Scalar(1));
  CHECK(asymmetry(p, towards) == Scalar(3));
  // Weights increase away from the root: the ratio shows up unfloored.
  EdgeWeights away(p, {Scalar(1), Scalar(3)});
  CHECK(directional_asymmetry(p, away, 0) == Scalar(3));
}

TEST_CASE("a tame tree beats its global-asymmetry bound via direction") {
  Graph p = make_path(2);
  EdgeWeights towards(p, {Scalar(3), Scalar(1)});
  WalkSpec spec(p, towards, 0);
  SolveResult r = hitting_times(spec, ArithMode::rational);
  CHECK(r.values[2] == Scalar(Rational(8, 3)));
  CHECK(r.values[2] <= bound_weighted_F(Scalar(1), 2));  // F(tau~, m) = 4
  CHECK(bound_weighted_F(Scalar(1), 2) < bound_weighted_F(Scalar(3), 2));
}

TEST_CASE("audit finds no violations on fixtures and flags path sharpness") {
  for (const Instance& inst : builtin_fixtures()) {
    BoundReport rep = audit(inst.graph, inst.weights, CostFunction::unit(inst.graph));
    CHECK(rep.violations == 0);
    CHECK(rep.pass);
    CHECK_FALSE(rep.sharp);  // none of the fixtures is a path
    CHECK(rep.max_residual == 0.0);
  }
  Graph p = make_path(6);
  BoundReport rep = audit(p, EdgeWeights::unit(p), CostFunction::unit(p));
  CHECK(rep.sharp);
  CHECK(rep.max_hitting == Scalar(36));
  CHECK(rep.violations == 0);
}

TEST_CASE("audit on one explicit target emits one record batch per source") {
  Graph g = make_path(3);
  BoundReport rep = audit(g, EdgeWeights::unit(g), CostFunction::unit(g),
                          std::vector<int>{0});
  // Simple tree: 5 hitting kinds + 3 cost kinds per non-absorbing source.
  CHECK(rep.records.size() == 3u * 8u);
  for (const PairRecord& r : rep.records) CHECK(r.target == 0);
  CHECK(rep.tree);
  CHECK(rep.simple);
}

TEST_CASE("audit preconditions") {
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK(thrown_code([&] {
          audit(split, EdgeWeights::unit(split), CostFunction::unit(split));
        }) == Errc::unreachable);

  Graph big = make_path(70);  // 71 vertices > 64: targets become mandatory
  CHECK(thrown_code([&] {
          audit(big, EdgeWeights::unit(big), CostFunction::unit(big));
        }) == Errc::invalid_argument);
  BoundReport ok = audit(big, EdgeWeights::unit(big), CostFunction::unit(big),
                         std::vector<int>{0});
  CHECK(ok.violations == 0);
}

TEST_CASE("bound kind names round-trip") {
  for (BoundKind k : {BoundKind::hitting_distance, BoundKind::hitting_tail,
                      BoundKind::hitting_poly, BoundKind::hitting_poly_tree,
                      BoundKind::hitting_coarse, BoundKind::cost_distance,
                      BoundKind::cost_max, BoundKind::cost_poly})
    CHECK(bound_kind_from_name(bound_kind_name(k)) == k);
  CHECK(thrown_code([] { bound_kind_from_name("nonsense"); }) == Errc::invalid_argument);
}
