#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkbound/graph.hpp"
#include "walkbound/scalar.hpp"

namespace walkbound {

// Edge-crossing polynomial: P(t, m) = 1 + 2 * sum_{k=1}^{m-1} t^k. Bounds the
// expected traversals of an edge at distance m-1 from the target when weight
// ratios are capped by t. P(1, m) = 2m - 1. Horner evaluation; exact for
// rational t. Pre: m >= 1.
Scalar poly_P(const Scalar& t, int m);

// Hitting-time polynomial: F(t, m) = m + sum_{k=1}^{m-1} 2(m-k) t^k, equal to
// sum_{j=1}^m P(t, j). F(1, m) = m^2 and F(t, m) is the exact worst hitting
// time among walks with ratio cap t (attained by the geometric path).
// Pre: m >= 0 (F(t, 0) = 0).
Scalar poly_F(const Scalar& t, int m);

// Worst hitting time of a simple walk at distance d on m edges:
// m^2 - (m-d)^2. Pre: 1 <= d <= m.
Scalar bound_simple_distance(int m, int d);

// Square-difference bound on simple trees: ell_a^2 - ell_x^2, with ell_a the
// root-side tail toward x. Pre: 0 <= ell_x < ell_a.
Scalar bound_tree_tail(int ell_a, int ell_x);

// Cost bounds for the simple walk, any start vertex:
//   refined: sum_e (2 d_a(e) + 1) f(e)
//   coarse:  m^2 * max f
struct CostBound {
  Scalar refined;
  Scalar coarse;
};
CostBound bound_cost_simple(const Graph& g, int a, const CostFunction& f);

// Hitting-time cap from the asymmetry ratio alone: F(tau, m).
Scalar bound_weighted_F(const Scalar& tau, int m);

// Cost bound for weighted walks: sum_e P(tau, d_a(e) + 1) f(e).
Scalar bound_main(const Graph& g, const EdgeWeights& w, const CostFunction& f, int a);

// Coarse cap m^2 * tau^(m-1) >= F(tau, m), for tau >= 1, m >= 1.
Scalar bound_coarse(const Scalar& tau, int m);

// Directional refinement on trees: the largest away-from-root over
// toward-root probability ratio at any vertex, floored at 1. Never exceeds
// the plain asymmetry; equals 1 when every step is biased toward the root.
Scalar directional_asymmetry(const Graph& g, const EdgeWeights& w, int a);

// Which cap produced a record. Names say what the cap is, not where it came
// from.
enum class BoundKind {
  hitting_distance,   // m^2 - (m-d)^2, simple walks
  hitting_tail,       // ell_a^2 - ell_x^2, simple walks on trees
  hitting_poly,       // F(tau, m), any weights
  hitting_poly_tree,  // F(tau~, m), any weights on trees
  hitting_coarse,     // m^2 tau^(m-1)
  cost_distance,      // sum (2 d_a(e)+1) f(e), simple walks
  cost_max,           // m^2 max f, simple walks
  cost_poly,          // sum P(tau, d_a(e)+1) f(e), any weights
};

const char* bound_kind_name(BoundKind k);
BoundKind bound_kind_from_name(const std::string& name);

struct PairRecord {
  int source = 0;
  int target = 0;
  BoundKind kind = BoundKind::hitting_poly;
  Scalar exact;  // H(source, target) for hitting kinds, H^f for cost kinds
  Scalar bound;
  Scalar slack;  // bound - exact
  bool pass = false;
};

struct BoundReport {
  std::vector<PairRecord> records;  // ordered by (target, source, kind)
  Scalar max_hitting;               // over all evaluated ordered pairs
  bool sharp = false;               // max_hitting == m^2 (within mode tolerance)
  long long violations = 0;
  bool pass = true;
  double max_residual = 0.0;
  Scalar tau;
  bool simple = false;
  bool tree = false;
};

// Evaluates every applicable cap against exact solves for each ordered
// (source, target) pair. All vertices serve as targets when n <= 64;
// larger graphs must name their targets. Pre: g connected.
BoundReport audit(const Graph& g, const EdgeWeights& w, const CostFunction& f,
                  std::optional<std::vector<int>> targets = {},
                  std::optional<ArithMode> mode = {});

}  // namespace walkbound
