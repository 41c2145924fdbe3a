#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkbound/graph.hpp"

namespace walkbound {

enum class InstanceFamily { path, random_tree, random_connected, fixture };

const char* instance_family_name(InstanceFamily f);
InstanceFamily instance_family_from_name(const std::string& name);

// Knobs for instance generation and campaign runs. Everything downstream of
// (seed, index) is deterministic.
struct CampaignConfig {
  InstanceFamily family = InstanceFamily::random_connected;
  int count = 10;
  int n_min = 4;
  int n_max = 12;
  int extra_edges_max = 8;      // random_connected: extra edges beyond the spanning tree
  Scalar tau_ceiling = Scalar(1);  // 1 = simple walk; otherwise weights in [1, tau]
  Scalar cost_max = Scalar(1);     // costs uniform in [0, cost_max]
  double simple_share = 0.5;    // fraction of weighted families forced to unit weights
  uint64_t seed = 0;
  ArithMode mode = ArithMode::rational;
  bool mc_spot_checks = false;
  long long mc_walks = 20000;
};

struct Instance {
  int index = 0;
  InstanceFamily family = InstanceFamily::path;
  std::string name;
  Graph graph;
  EdgeWeights weights;
  CostFunction costs;
  int absorbing = 0;
  // Fixtures carry their known exact hitting profile toward `absorbing`.
  std::optional<std::vector<Scalar>> expected_hitting;
};

// Deterministic in (config.seed, index). Paths get geometric weights with
// ratio tau_ceiling (exactly the worst case for the asymmetry cap; unit when
// tau_ceiling = 1). Random families draw sizes from [n_min, n_max], weights
// log-uniformly from [1, tau_ceiling] snapped to the 1/64 grid, and costs
// uniformly from [0, cost_max] snapped the same way. InvalidConfig on
// nonsensical ranges.
Instance generate_instance(const CampaignConfig& config, int index);

// Small graphs with hand-checked exact hitting profiles; the fixture family
// cycles through these.
const std::vector<Instance>& builtin_fixtures();

}  // namespace walkbound
