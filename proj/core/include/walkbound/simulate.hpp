#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "walkbound/graph.hpp"
#include "walkbound/rng.hpp"

namespace walkbound {

// Per-vertex cumulative transition probabilities in double precision, for
// O(log deg) neighbor sampling. A draw u in [0,1) selects the first slot
// whose upper boundary is >= u, so a u exactly on a boundary resolves to the
// lower slot. The last boundary is forced to 1.
class SamplingTable {
 public:
  SamplingTable(const Graph& g, const EdgeWeights& w);

  int sample_slot(int x, double u) const;
  int neighbor_at(int x, int slot) const;  // vertex id
  int edge_at(int x, int slot) const;      // edge id
  double probability(int x, int slot) const;
  int slot_count(int x) const { return static_cast<int>(nbr_[x].size()); }

 private:
  std::vector<std::vector<double>> cum_;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::vector<int>> eidx_;
};

struct WalkOutcome {
  long long steps = 0;
  double cost = 0.0;
  bool absorbed = false;  // false = censored at the step guard
};

struct EstimateSummary {
  long long walks = 0;
  double mean = 0.0;
  double sd = 0.0;         // sample standard deviation
  double halfwidth = 0.0;  // 1.96 sd / sqrt(walks)
  uint64_t seed = 0;
  long long censored = 0;
};

struct ConnectivityVerdict {
  bool connected_certain = false;  // an actual s->t walk was observed
  int repetitions_used = 0;
  long long walk_length = 0;       // steps per repetition (2N)
  double epsilon = 0.0;
};

inline constexpr long long kDefaultStepGuard = 1'000'000'000;

// One trajectory from `start` until absorption, accumulating per-edge costs
// (nullptr = count steps, i.e. unit costs). Stops unabsorbed after max_steps
// or at a stuck (isolated) vertex.
WalkOutcome simulate_walk(const SamplingTable& tbl, int absorbing, int start,
                          const std::vector<double>* cost_by_edge, long long max_steps,
                          SplitMix64& rng);

// Monte Carlo mean of the walk cost from `start` (f = nullptr counts steps).
// Walk i draws from substream (seed, i) and the reduction runs in walk-index
// order, so results are bit-identical for any worker count. CensoredSample
// if any walk hits the guard.
EstimateSummary estimate_hitting(const WalkSpec& spec, const CostFunction* f, int start,
                                 long long walks, uint64_t seed,
                                 long long guard = kDefaultStepGuard);

// Monte Carlo mean of traversals of one edge, same determinism contract.
EstimateSummary estimate_edge_visits(const WalkSpec& spec, int edge, int start, long long walks,
                                     uint64_t seed, long long guard = kDefaultStepGuard);

// One-sided randomized s-t connectivity in O(1) memory: up to
// ceil(log2(1/epsilon)) independent walks of 2N steps; any arrival is a
// certificate, and a connected pair escapes detection with probability at
// most 2^-k <= epsilon when N caps the true expected hitting time.
// hitting_cap overrides N; the default is m^2 for simple weights and
// F(tau, m) otherwise. Each repetition walks 2N steps either way.
ConnectivityVerdict st_connectivity(const Graph& g, const EdgeWeights& w, int source, int target,
                                    double epsilon, std::optional<long long> hitting_cap = {},
                                    uint64_t seed = 0);

}  // namespace walkbound
