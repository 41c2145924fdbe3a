// Shared test utilities: small graph builders, an error-code catcher, and a
// value-iteration oracle kept deliberately independent of the library solver.
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "walkbound/errors.hpp"
#include "walkbound/graph.hpp"
#include "walkbound/parse.hpp"

namespace testutil {

namespace wb = walkbound;

// Path with m edges, vertices labeled "0".."m", absorbing end at "0".
inline wb::Graph make_path(int m) {
  std::vector<wb::Edge> edges;
  for (int i = 0; i < m; ++i) edges.push_back({i, i + 1});
  return wb::Graph(m + 1, std::move(edges));
}

inline wb::ParsedDocument doc(const std::string& text) { return wb::parse_graph_string(text); }

// Runs fn and reports the walkbound error code it threw, if any.
template <typename Fn>
std::optional<wb::Errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const wb::Error& e) {
    return e.code();
  } catch (...) {
    return std::nullopt;
  }
  return std::nullopt;
}

// Value-iteration oracle for cost hitting times, written against the raw
// graph (not the library solver): h <- rhs + P h, starting from zero, which
// increases monotonically to the least fixed point. Plain doubles; per-step
// rhs_x = sum_z p_xz f(xz) (unit costs when f is null).
inline std::vector<double> value_iteration_hitting(const wb::Graph& g, const wb::EdgeWeights& w,
                                                   int absorbing,
                                                   const std::vector<double>* cost_by_edge,
                                                   double tol = 1e-14,
                                                   long long max_sweeps = 2'000'000) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, double>>> p(n);  // (neighbor, probability)
  std::vector<double> rhs(n, 0.0);
  for (int x = 0; x < n; ++x) {
    if (x == absorbing) continue;
    double total = 0.0;
    for (auto [y, e] : g.neighbors(x)) {
      (void)y;
      total += w[e].to_double();
    }
    for (auto [y, e] : g.neighbors(x)) {
      double pxy = w[e].to_double() / total;
      p[x].push_back({y, pxy});
      rhs[x] += pxy * (cost_by_edge ? (*cost_by_edge)[e] : 1.0);
    }
  }
  std::vector<double> h(n, 0.0), next(n, 0.0);
  double prev_change = 0.0;
  for (long long sweep = 0; sweep < max_sweeps; ++sweep) {
    double change = 0.0, scale = 1.0;
    for (int x = 0; x < n; ++x) {
      if (x == absorbing) {
        next[x] = 0.0;
        continue;
      }
      double acc = rhs[x];
      for (auto [y, pxy] : p[x]) acc += pxy * h[y];
      next[x] = acc;
      change = std::max(change, std::abs(next[x] - h[x]));
      scale = std::max(scale, std::abs(next[x]));
    }
    h.swap(next);
    // The distance to the fixed point is about change * r / (1 - r) for
    // contraction ratio r, estimated from consecutive sweeps.
    double ratio = prev_change > 0.0 ? std::min(change / prev_change, 0.999999) : 0.5;
    if (change * ratio / (1.0 - ratio) <= tol * scale) break;
    prev_change = change;
  }
  return h;
}

}  // namespace testutil
