#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "walkbound/bounds.hpp"
#include "walkbound/campaign.hpp"
#include "walkbound/errors.hpp"
#include "walkbound/generate.hpp"
#include "walkbound/parse.hpp"
#include "walkbound/solver.hpp"
#include "walkbound/tree.hpp"

using namespace walkbound;
using testutil::thrown_code;

namespace {

std::string fingerprint(const Instance& inst) {
  return inst.name + "@" + inst.graph.label(inst.absorbing) + "\n" +
         emit_edge_list(inst.graph, &inst.weights, &inst.costs);
}

}  // namespace

TEST_CASE("instances are a pure function of seed and index") {
  CampaignConfig cfg;
  cfg.family = InstanceFamily::random_connected;
  cfg.count = 8;
  cfg.tau_ceiling = Scalar(3);
  cfg.cost_max = Scalar(5);
  cfg.seed = 99;
  for (int i = 0; i < cfg.count; ++i)
    CHECK(fingerprint(generate_instance(cfg, i)) == fingerprint(generate_instance(cfg, i)));
  CHECK(fingerprint(generate_instance(cfg, 0)) != fingerprint(generate_instance(cfg, 1)));
  CampaignConfig other = cfg;
  other.seed = 100;
  CHECK(fingerprint(generate_instance(cfg, 0)) != fingerprint(generate_instance(other, 0)));
}

TEST_CASE("generated instances satisfy their structural contracts") {
  CampaignConfig cfg;
  cfg.count = 30;
  cfg.n_min = 3;
  cfg.n_max = 11;
  cfg.tau_ceiling = Scalar(3);
  cfg.cost_max = Scalar(5);
  cfg.seed = 7;

  for (InstanceFamily fam : {InstanceFamily::path, InstanceFamily::random_tree,
                             InstanceFamily::random_connected}) {
    cfg.family = fam;
    for (int i = 0; i < cfg.count; ++i) {
      Instance inst = generate_instance(cfg, i);
      const Graph& g = inst.graph;
      CHECK(g.vertex_count() >= cfg.n_min);
      CHECK(g.vertex_count() <= cfg.n_max);
      CHECK(g.connected());
      CHECK(inst.weights.mode() == ArithMode::rational);
      CHECK(asymmetry(g, inst.weights) <= cfg.tau_ceiling);
      for (int e = 0; e < g.edge_count(); ++e) {
        CHECK(inst.weights[e] >= Scalar(1));
        CHECK(inst.costs[e] >= Scalar(0));
        CHECK(inst.costs[e] <= cfg.cost_max);
        // Costs snap to the 1/64 grid: 64 f is an integer.
        CHECK(denominator(Rational(64) * inst.costs[e].rational()) == 1);
        if (fam != InstanceFamily::path) {
          // Random weights stay inside [1, tau] on the same grid; path
          // weights instead grow geometrically, capped only in ratio.
          CHECK(inst.weights[e] <= cfg.tau_ceiling);
          CHECK(denominator(Rational(64) * inst.weights[e].rational()) == 1);
        }
      }
      if (fam != InstanceFamily::random_connected) CHECK(is_tree(g));
      if (fam == InstanceFamily::path) {
        CHECK(inst.absorbing == 0);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) <= 2);
      }
    }
  }
}

TEST_CASE("weighted path instances carry exact geometric weights") {
  CampaignConfig cfg;
  cfg.family = InstanceFamily::path;
  cfg.count = 6;
  cfg.n_min = 5;
  cfg.n_max = 5;
  cfg.tau_ceiling = Scalar(2);
  cfg.simple_share = 0.0;  // force the weighted branch
  cfg.seed = 3;
  Instance inst = generate_instance(cfg, 0);
  const int m = inst.graph.edge_count();
  REQUIRE(m == 4);
  // Weight ratio between consecutive edges is exactly tau.
  SolveResult r = hitting_times(WalkSpec(inst.graph, inst.weights, 0), ArithMode::rational);
  Scalar far = r.values[m];
  CHECK(far == bound_weighted_F(Scalar(2), m));  // extremal instance is tight
}

TEST_CASE("fixture family cycles through the built-in profiles") {
  CampaignConfig cfg;
  cfg.family = InstanceFamily::fixture;
  cfg.count = 9;
  const auto& fixtures = builtin_fixtures();
  Instance first = generate_instance(cfg, 0);
  Instance wrapped = generate_instance(cfg, static_cast<int>(fixtures.size()));
  CHECK(first.name == wrapped.name);
  CHECK(fingerprint(first) == fingerprint(wrapped));
  for (const Instance& fx : fixtures) {
    REQUIRE(fx.expected_hitting.has_value());
    SolveResult r = hitting_times(WalkSpec(fx.graph, fx.weights, fx.absorbing),
                                  ArithMode::rational);
    CHECK_MESSAGE(r.values == *fx.expected_hitting, fx.name);
  }
}

TEST_CASE("config validation rejects nonsense") {
  CampaignConfig cfg;
  cfg.count = 0;
  CHECK(thrown_code([&] { generate_instance(cfg, 0); }) == Errc::invalid_config);
  cfg = CampaignConfig{};
  cfg.n_min = 1;
  CHECK(thrown_code([&] { generate_instance(cfg, 0); }) == Errc::invalid_config);
  cfg = CampaignConfig{};
  cfg.n_min = 9;
  cfg.n_max = 4;
  CHECK(thrown_code([&] { generate_instance(cfg, 0); }) == Errc::invalid_config);
  cfg = CampaignConfig{};
  cfg.tau_ceiling = Scalar(Rational(1, 2));
  CHECK(thrown_code([&] { generate_instance(cfg, 0); }) == Errc::invalid_config);
  cfg = CampaignConfig{};
  cfg.cost_max = Scalar(-1);
  CHECK(thrown_code([&] { generate_instance(cfg, 0); }) == Errc::invalid_config);
  cfg = CampaignConfig{};
  cfg.simple_share = 1.5;
  CHECK(thrown_code([&] { generate_instance(cfg, 0); }) == Errc::invalid_config);
}

TEST_CASE("campaigns pass their cross-checks and are deterministic") {
  CampaignConfig cfg;
  cfg.family = InstanceFamily::random_connected;
  cfg.count = 10;
  cfg.n_min = 4;
  cfg.n_max = 10;
  cfg.tau_ceiling = Scalar(2);
  cfg.cost_max = Scalar(3);
  cfg.seed = 2024;
  cfg.mc_spot_checks = true;
  cfg.mc_walks = 4000;

  Report a = run_campaign(cfg);
  CHECK(a.summary.pass);
  CHECK(a.summary.instances == 10);
  CHECK(a.summary.bound_violations == 0);
  CHECK(a.summary.check_failures == 0);
  CHECK(a.summary.solver_failures == 0);
  CHECK(a.summary.records > 0);
  for (const InstanceRecord& rec : a.instances) {
    CHECK(rec.pass);
    CHECK_FALSE(rec.checks.empty());
    bool commute_checked = false;
    for (const CrossCheck& c : rec.checks)
      if (c.name == "commute-resistance-identity") commute_checked = c.applicable;
    CHECK(commute_checked);
    if (rec.spot_check) CHECK(rec.spot_check->censored == 0);
  }

  Report b = run_campaign(cfg);
  REQUIRE(b.instances.size() == a.instances.size());
  for (size_t i = 0; i < a.instances.size(); ++i) {
    CHECK(a.instances[i].name == b.instances[i].name);
    CHECK(a.instances[i].bounds.max_hitting == b.instances[i].bounds.max_hitting);
    if (a.instances[i].spot_check)
      CHECK(a.instances[i].spot_check->mean == b.instances[i].spot_check->mean);
  }
}

TEST_CASE("fixture campaigns replay the expected profiles exactly") {
  CampaignConfig cfg;
  cfg.family = InstanceFamily::fixture;
  cfg.count = static_cast<int>(builtin_fixtures().size());
  Report rep = run_campaign(cfg);
  CHECK(rep.summary.pass);
  for (const InstanceRecord& rec : rep.instances) {
    bool profile_checked = false;
    for (const CrossCheck& c : rec.checks)
      if (c.name == "fixture-profile") {
        profile_checked = c.applicable;
        CHECK(c.ok);
      }
    CHECK(profile_checked);
  }
}
