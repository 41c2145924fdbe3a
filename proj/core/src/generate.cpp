#include "walkbound/generate.hpp"

#include <algorithm>
#include <cmath>

#include "walkbound/errors.hpp"
#include "walkbound/rng.hpp"

namespace walkbound {

const char* instance_family_name(InstanceFamily f) {
  switch (f) {
    case InstanceFamily::path: return "path";
    case InstanceFamily::random_tree: return "random-tree";
    case InstanceFamily::random_connected: return "random-connected";
    case InstanceFamily::fixture: return "fixture";
  }
  return "family";
}

InstanceFamily instance_family_from_name(const std::string& name) {
  if (name == "path") return InstanceFamily::path;
  if (name == "random-tree") return InstanceFamily::random_tree;
  if (name == "random-connected") return InstanceFamily::random_connected;
  if (name == "fixture") return InstanceFamily::fixture;
  fail(Errc::invalid_argument, "unknown instance family '" + name + "'");
}

namespace {

Instance make_fixture(int index, std::string name, int n, std::vector<Edge> edges, int absorbing,
                      std::vector<Scalar> expected) {
  Graph g(n, std::move(edges));
  EdgeWeights w = EdgeWeights::unit(g);
  CostFunction f = CostFunction::unit(g);
  return Instance{index,        InstanceFamily::fixture, std::move(name), std::move(g),
                  std::move(w), std::move(f),            absorbing,       std::move(expected)};
}

std::vector<Instance> build_fixtures() {
  std::vector<Instance> out;
  auto r = [](long long p, long long q) { return Scalar(Rational(p, q)); };
  out.push_back(make_fixture(0, "pendant-triangle", 4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, 0,
                             {Scalar(0), Scalar(7), Scalar(9), Scalar(9)}));
  out.push_back(make_fixture(1, "pendant-square", 5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}, 0,
                             {Scalar(0), Scalar(9), Scalar(12), Scalar(12), Scalar(13)}));
  out.push_back(make_fixture(
      2, "pendant-clique", 5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 0,
      {Scalar(0), Scalar(13), Scalar(16), Scalar(16), Scalar(16)}));
  out.push_back(make_fixture(
      3, "dense-five", 5, {{0, 1}, {0, 2}, {1, 2}, {2, 4}, {1, 3}, {1, 4}, {3, 4}}, 0,
      {Scalar(0), r(19, 3), r(17, 3), Scalar(8), r(23, 3)}));
  out.push_back(make_fixture(
      4, "hub-five", 6,
      {{0, 1}, {0, 2}, {2, 4}, {1, 3}, {3, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}, 0,
      {Scalar(0), r(60, 11), r(60, 11), r(80, 11), r(80, 11), r(67, 11)}));
  out.push_back(make_fixture(
      5, "twin-levels", 7,
      {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {6, 2}, {6, 3}, {6, 4}, {6, 5}}, 6,
      {Scalar(6), Scalar(6), r(9, 2), r(9, 2), r(9, 2), r(9, 2), Scalar(0)}));
  out.push_back(make_fixture(
      6, "skew-levels", 7,
      {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {6, 2}, {6, 3}, {6, 5}}, 6,
      {r(80, 11), r(94, 11), r(113, 22), r(113, 22), r(95, 11), r(74, 11), Scalar(0)}));
  return out;
}

// Nearest 1/64 within [lo, hi]; dyadic rationals keep exact campaigns cheap.
Scalar snap(double x, const Scalar& lo, const Scalar& hi) {
  long long k = std::llround(x * 64.0);
  Scalar s{Rational(k, 64)};
  if (s < lo) return lo;
  if (s > hi) return hi;
  return s;
}

Scalar sample_weight(SplitMix64& rng, const Scalar& tau) {
  double t = tau.to_double();
  double x = std::exp(rng.next_unit() * std::log(t));
  return snap(x, Scalar(1), tau);
}

Scalar sample_cost(SplitMix64& rng, const Scalar& cost_max) {
  double x = rng.next_unit() * cost_max.to_double();
  return snap(x, Scalar(0), cost_max);
}

void validate(const CampaignConfig& c) {
  if (c.count < 1) fail(Errc::invalid_config, "count must be >= 1");
  if (c.n_min < 2 || c.n_min > c.n_max) fail(Errc::invalid_config, "need 2 <= n_min <= n_max");
  if (c.extra_edges_max < 0) fail(Errc::invalid_config, "extra_edges_max must be >= 0");
  if (c.tau_ceiling < Scalar(1)) fail(Errc::invalid_config, "tau_ceiling must be >= 1");
  if (c.cost_max < Scalar(0)) fail(Errc::invalid_config, "cost_max must be >= 0");
  if (!(c.simple_share >= 0.0 && c.simple_share <= 1.0))
    fail(Errc::invalid_config, "simple_share must lie in [0, 1]");
  if (c.mc_walks < 1) fail(Errc::invalid_config, "mc_walks must be >= 1");
}

}  // namespace

const std::vector<Instance>& builtin_fixtures() {
  static const std::vector<Instance> fixtures = build_fixtures();
  return fixtures;
}

Instance generate_instance(const CampaignConfig& config, int index) {
  validate(config);
  if (index < 0) fail(Errc::invalid_argument, "index must be >= 0");

  if (config.family == InstanceFamily::fixture) {
    const auto& fx = builtin_fixtures();
    Instance inst = fx[static_cast<size_t>(index) % fx.size()];
    inst.index = index;
    return inst;
  }

  SplitMix64 rng(substream_seed(config.seed, static_cast<uint64_t>(index)));
  int n = config.n_min +
          static_cast<int>(rng.next_below(static_cast<uint64_t>(config.n_max - config.n_min + 1)));

  std::vector<Edge> edges;
  if (config.family == InstanceFamily::path) {
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
  } else {
    for (int v = 1; v < n; ++v)
      edges.push_back({static_cast<int>(rng.next_below(static_cast<uint64_t>(v))), v});
    if (config.family == InstanceFamily::random_connected) {
      std::vector<Edge> spare;
      std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
      for (const Edge& e : edges) have[e.u][e.v] = have[e.v][e.u] = 1;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!have[u][v]) spare.push_back({u, v});
      int extra = static_cast<int>(rng.next_below(static_cast<uint64_t>(config.extra_edges_max) + 1));
      extra = std::min<int>(extra, static_cast<int>(spare.size()));
      for (int i = 0; i < extra; ++i) {
        // Partial Fisher-Yates: position i swaps with a uniform j >= i.
        size_t j = i + rng.next_below(spare.size() - i);
        std::swap(spare[i], spare[j]);
        edges.push_back(spare[i]);
      }
    }
  }

  Graph g(n, std::move(edges));
  const int m = g.edge_count();

  bool simple = config.tau_ceiling == Scalar(1) || rng.next_unit() < config.simple_share;
  std::vector<Scalar> wvals;
  wvals.reserve(m);
  if (config.family == InstanceFamily::path && !simple) {
    // Geometric profile: every interior vertex pushes away from vertex 0 with
    // ratio exactly tau, the extremal instance for the asymmetry cap.
    Scalar acc(1);
    for (int e = 0; e < m; ++e) {
      wvals.push_back(acc);
      acc *= config.tau_ceiling;
    }
  } else {
    for (int e = 0; e < m; ++e)
      wvals.push_back(simple ? Scalar(1) : sample_weight(rng, config.tau_ceiling));
  }

  std::vector<Scalar> fvals;
  fvals.reserve(m);
  for (int e = 0; e < m; ++e) fvals.push_back(sample_cost(rng, config.cost_max));

  int absorbing = config.family == InstanceFamily::path
                      ? 0
                      : static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));

  EdgeWeights w(g, std::move(wvals));
  CostFunction f(g, std::move(fvals));
  Instance inst{index,
                config.family,
                std::string(instance_family_name(config.family)) + "-" + std::to_string(index),
                std::move(g),
                std::move(w),
                std::move(f),
                absorbing,
                std::nullopt};
  return inst;
}

}  // namespace walkbound
