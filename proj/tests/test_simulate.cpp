#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <set>

#include "helpers.hpp"
#include "walkbound/errors.hpp"
#include "walkbound/generate.hpp"
#include "walkbound/rng.hpp"
#include "walkbound/simulate.hpp"
#include "walkbound/solver.hpp"

using namespace walkbound;
using testutil::make_path;
using testutil::thrown_code;

namespace {

struct ThreadsGuard {
  // Scoped worker-count override via the environment knob the library reads.
  explicit ThreadsGuard(const char* value) { setenv("WALKBOUND_THREADS", value, 1); }
  ~ThreadsGuard() { unsetenv("WALKBOUND_THREADS"); }
};

}  // namespace

TEST_CASE("substreams are deterministic and spread out") {
  CHECK(substream_seed(1, 0) == substream_seed(1, 0));
  CHECK(substream_seed(1, 0) != substream_seed(1, 1));
  CHECK(substream_seed(1, 0) != substream_seed(2, 0));
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < 4096; ++i) seen.insert(substream_seed(99, i));
  CHECK(seen.size() == 4096u);

  SplitMix64 rng(7);
  double u = rng.next_unit();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
  SplitMix64 again(7);
  CHECK(again.next_unit() == u);
}

TEST_CASE("sampling tables mirror the transition probabilities") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  EdgeWeights w(g, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
  SamplingTable tbl(g, w);
  TransitionMatrix t = transition_probabilities(g, w, -1, ArithMode::floating);
  for (int x = 0; x < 4; ++x) {
    REQUIRE(tbl.slot_count(x) == static_cast<int>(t.rows[x].size()));
    for (int s = 0; s < tbl.slot_count(x); ++s) {
      CHECK(tbl.neighbor_at(x, s) == t.rows[x][s].first);
      CHECK(tbl.probability(x, s) ==
            doctest::Approx(t.rows[x][s].second.to_double()).epsilon(1e-12));
    }
  }
  // Boundary draws resolve to the lower slot; u just below 1 lands in the last.
  CHECK(tbl.sample_slot(1, 0.0) == 0);
  CHECK(tbl.sample_slot(1, std::nextafter(1.0, 0.0)) == tbl.slot_count(1) - 1);
}

TEST_CASE("single-edge walks absorb in exactly one step") {
  Graph g(2, {{0, 1}});
  SamplingTable tbl(g, EdgeWeights::unit(g));
  SplitMix64 rng(3);
  WalkOutcome out = simulate_walk(tbl, 0, 1, nullptr, 100, rng);
  CHECK(out.absorbed);
  CHECK(out.steps == 1);
  CHECK(out.cost == 1.0);
}

TEST_CASE("estimates are reproducible and seed-sensitive") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  WalkSpec spec(g, EdgeWeights::unit(g), 0);
  EstimateSummary a = estimate_hitting(spec, nullptr, 1, 4000, 11);
  EstimateSummary b = estimate_hitting(spec, nullptr, 1, 4000, 11);
  CHECK(a.mean == b.mean);
  CHECK(a.sd == b.sd);
  EstimateSummary c = estimate_hitting(spec, nullptr, 1, 4000, 12);
  CHECK(a.mean != c.mean);
}

TEST_CASE("worker count never changes the reduction") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  WalkSpec spec(g, EdgeWeights::unit(g), 0);
  EstimateSummary one, three;
  {
    ThreadsGuard tg("1");
    one = estimate_hitting(spec, nullptr, 2, 6000, 5);
  }
  {
    ThreadsGuard tg("3");
    three = estimate_hitting(spec, nullptr, 2, 6000, 5);
  }
  CHECK(one.mean == three.mean);
  CHECK(one.sd == three.sd);
  CHECK(one.halfwidth == three.halfwidth);
}

TEST_CASE("estimates agree with exact solves within the interval") {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  WalkSpec spec(g, EdgeWeights::unit(g), 0);
  SolveResult exact = hitting_times(spec, ArithMode::rational);
  EstimateSummary est = estimate_hitting(spec, nullptr, 2, 50000, 123);
  CHECK(std::abs(est.mean - exact.values[2].to_double()) <= 4 * est.halfwidth + 1e-6);

  // Cost-weighted version against the cost solve.
  std::vector<Scalar> f = {Scalar(2), Scalar(1), Scalar(0), Scalar(Rational(1, 2))};
  CostFunction cost(g, f);
  SolveResult exact_cost = cost_hitting_times(spec, cost, ArithMode::rational);
  EstimateSummary est_cost = estimate_hitting(spec, &cost, 2, 50000, 321);
  CHECK(std::abs(est_cost.mean - exact_cost.values[2].to_double()) <=
        4 * est_cost.halfwidth + 1e-6);

  // Edge traversal counts against the indicator solve.
  SolveResult exact_edge = edge_visit_counts(spec, 1, ArithMode::rational);
  EstimateSummary est_edge = estimate_edge_visits(spec, 1, 2, 50000, 77);
  CHECK(std::abs(est_edge.mean - exact_edge.values[2].to_double()) <=
        4 * est_edge.halfwidth + 1e-6);
}

TEST_CASE("validation and censoring guards") {
  Graph g = make_path(4);
  WalkSpec spec(g, EdgeWeights::unit(g), 0);
  CHECK(thrown_code([&] { estimate_hitting(spec, nullptr, 4, 0, 1); }) ==
        Errc::invalid_argument);  // zero walks
  CHECK(thrown_code([&] { estimate_hitting(spec, nullptr, 9, 10, 1); }) ==
        Errc::invalid_argument);  // start out of range
  CHECK(thrown_code([&] { estimate_hitting(spec, nullptr, 4, 10, 1, 2); }) ==
        Errc::censored_sample);  // guard of 2 steps cannot reach the far end

  Graph split(4, {{0, 1}, {2, 3}});
  WalkSpec stuck(split, EdgeWeights::unit(split), 0);
  CHECK(thrown_code([&] { estimate_hitting(stuck, nullptr, 3, 10, 1); }) == Errc::unreachable);
}

TEST_CASE("connectivity never reports a false positive") {
  Graph split(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  EdgeWeights w = EdgeWeights::unit(split);
  for (uint64_t seed = 0; seed < 10; ++seed)
    for (int s : {0, 1, 2})
      for (int t : {3, 4, 5}) {
        ConnectivityVerdict v = st_connectivity(split, w, s, t, 0.01, {}, seed);
        CHECK_FALSE(v.connected_certain);
        CHECK(v.repetitions_used == 7);  // ceil(log2(100))
      }
}

TEST_CASE("connectivity certifies connected pairs and respects overrides") {
  Graph g = make_path(5);
  EdgeWeights w = EdgeWeights::unit(g);
  ConnectivityVerdict v = st_connectivity(g, w, 5, 0, 0.001, {}, 4);
  CHECK(v.connected_certain);
  CHECK(v.walk_length == 50);  // default 2 m^2
  // The override names the hitting cap N; repetitions still walk 2N steps.
  ConnectivityVerdict forced = st_connectivity(g, w, 5, 0, 0.25, 9, 4);
  CHECK(forced.walk_length == 18);
  ConnectivityVerdict self = st_connectivity(g, w, 2, 2, 0.5);
  CHECK(self.connected_certain);
  CHECK(thrown_code([&] { st_connectivity(g, w, 0, 1, 0.0); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { st_connectivity(g, w, 0, 1, 1.0); }) == Errc::invalid_argument);
}

TEST_CASE("weighted default walk length uses the asymmetry bound") {
  Graph p = make_path(2);
  EdgeWeights skew(p, {Scalar(1), Scalar(2)});
  ConnectivityVerdict v = st_connectivity(p, skew, 2, 0, 0.5, {}, 1);
  // F(2, 2) = 2 + 2*2 = 6, so walks run 12 steps.
  CHECK(v.walk_length == 12);
}
