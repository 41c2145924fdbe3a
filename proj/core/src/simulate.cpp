#include "walkbound/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "walkbound/bounds.hpp"
#include "walkbound/errors.hpp"
#include "walkbound/threads.hpp"

namespace walkbound {

SamplingTable::SamplingTable(const Graph& g, const EdgeWeights& w) {
  const int n = g.vertex_count();
  cum_.resize(n);
  nbr_.resize(n);
  eidx_.resize(n);
  for (int x = 0; x < n; ++x) {
    const auto& row = g.neighbors(x);
    if (row.empty()) continue;
    double total = 0.0;
    for (auto [y, e] : row) {
      (void)y;
      total += w[e].to_double();
    }
    double acc = 0.0;
    for (auto [y, e] : row) {
      acc += w[e].to_double() / total;
      nbr_[x].push_back(y);
      eidx_[x].push_back(e);
      cum_[x].push_back(acc);
    }
    cum_[x].back() = 1.0;
  }
}

int SamplingTable::sample_slot(int x, double u) const {
  const auto& c = cum_[x];
  auto it = std::lower_bound(c.begin(), c.end(), u);
  if (it == c.end()) --it;
  return static_cast<int>(it - c.begin());
}

int SamplingTable::neighbor_at(int x, int slot) const { return nbr_[x][slot]; }
int SamplingTable::edge_at(int x, int slot) const { return eidx_[x][slot]; }

double SamplingTable::probability(int x, int slot) const {
  return cum_[x][slot] - (slot > 0 ? cum_[x][slot - 1] : 0.0);
}

WalkOutcome simulate_walk(const SamplingTable& tbl, int absorbing, int start,
                          const std::vector<double>* cost_by_edge, long long max_steps,
                          SplitMix64& rng) {
  WalkOutcome out;
  int x = start;
  while (x != absorbing) {
    if (out.steps >= max_steps || tbl.slot_count(x) == 0) return out;
    int slot = tbl.sample_slot(x, rng.next_unit());
    if (cost_by_edge) out.cost += (*cost_by_edge)[tbl.edge_at(x, slot)];
    x = tbl.neighbor_at(x, slot);
    ++out.steps;
  }
  out.absorbed = true;
  if (!cost_by_edge) out.cost = static_cast<double>(out.steps);
  return out;
}

namespace {

EstimateSummary estimate(const WalkSpec& spec, const std::vector<double>* cost_by_edge, int start,
                         long long walks, uint64_t seed, long long guard) {
  const Graph& g = spec.graph;
  if (start < 0 || start >= g.vertex_count()) fail(Errc::invalid_argument, "start out of range");
  if (walks < 1) fail(Errc::invalid_argument, "need at least one walk");
  if (guard < 1) fail(Errc::invalid_argument, "step guard must be positive");
  std::vector<int> dist = bfs_distances(g, spec.absorbing);
  if (dist[start] < 0)
    fail(Errc::unreachable, "'" + g.label(start) + "' cannot reach the absorbing vertex");

  SamplingTable tbl(g, spec.weights);
  std::vector<double> value(walks);
  std::vector<char> censored(walks);
  parallel_for(walks, [&](long long begin, long long end) {
    for (long long i = begin; i < end; ++i) {
      SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(i)));
      WalkOutcome o = simulate_walk(tbl, spec.absorbing, start, cost_by_edge, guard, rng);
      value[i] = o.cost;
      censored[i] = o.absorbed ? 0 : 1;
    }
  });

  EstimateSummary s;
  s.walks = walks;
  s.seed = seed;
  for (long long i = 0; i < walks; ++i) s.censored += censored[i];
  if (s.censored > 0)
    fail(Errc::censored_sample, std::to_string(s.censored) + " of " + std::to_string(walks) +
                                    " walks hit the " + std::to_string(guard) + "-step guard");
  double sum = 0.0;
  for (long long i = 0; i < walks; ++i) sum += value[i];
  s.mean = sum / static_cast<double>(walks);
  if (walks > 1) {
    double ss = 0.0;
    for (long long i = 0; i < walks; ++i) {
      double d = value[i] - s.mean;
      ss += d * d;
    }
    s.sd = std::sqrt(ss / static_cast<double>(walks - 1));
    s.halfwidth = 1.96 * s.sd / std::sqrt(static_cast<double>(walks));
  }
  return s;
}

}  // namespace

EstimateSummary estimate_hitting(const WalkSpec& spec, const CostFunction* f, int start,
                                 long long walks, uint64_t seed, long long guard) {
  if (!f) return estimate(spec, nullptr, start, walks, seed, guard);
  if (f->size() != spec.graph.edge_count()) fail(Errc::invalid_argument, "costs do not match graph");
  std::vector<double> cost(spec.graph.edge_count());
  for (int e = 0; e < f->size(); ++e) cost[e] = (*f)[e].to_double();
  return estimate(spec, &cost, start, walks, seed, guard);
}

EstimateSummary estimate_edge_visits(const WalkSpec& spec, int edge, int start, long long walks,
                                     uint64_t seed, long long guard) {
  if (edge < 0 || edge >= spec.graph.edge_count())
    fail(Errc::invalid_argument, "edge index out of range");
  std::vector<double> cost(spec.graph.edge_count(), 0.0);
  cost[edge] = 1.0;
  return estimate(spec, &cost, start, walks, seed, guard);
}

ConnectivityVerdict st_connectivity(const Graph& g, const EdgeWeights& w, int source, int target,
                                    double epsilon, std::optional<long long> hitting_cap,
                                    uint64_t seed) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n || target < 0 || target >= n)
    fail(Errc::invalid_argument, "vertex out of range");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    fail(Errc::invalid_argument, "epsilon must lie in (0, 1)");

  ConnectivityVerdict v;
  v.epsilon = epsilon;
  if (source == target) {
    v.connected_certain = true;
    return v;
  }

  long long cap = hitting_cap.value_or(0);
  if (cap <= 0) {
    long long m = g.edge_count();
    if (is_simple(g, w)) {
      cap = m * m;
    } else {
      double f = poly_F(asymmetry(g, w), static_cast<int>(m)).to_double();
      cap = f >= 4.0e18 ? (1LL << 62) : static_cast<long long>(std::ceil(f));
    }
    cap = std::max(cap, 1LL);
  }
  v.walk_length = 2 * cap;

  int k = std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / epsilon))));
  SamplingTable tbl(g, w);
  for (int rep = 0; rep < k; ++rep) {
    SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(rep)));
    WalkOutcome o = simulate_walk(tbl, target, source, nullptr, v.walk_length, rng);
    v.repetitions_used = rep + 1;
    if (o.absorbed) {
      v.connected_certain = true;
      return v;
    }
  }
  return v;
}

}  // namespace walkbound
