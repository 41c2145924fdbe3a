#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "walkbound/graph.hpp"

namespace walkbound {

enum class ResultKind {
  hitting,
  cost_hitting,
  vertex_visits,
  edge_visits,
  probability,
  stationary,
  voltage,
};

const char* result_kind_name(ResultKind k);

// Values indexed by vertex id, tagged with what they mean and how they were
// computed. residual is the relative floating residual of the solve (0 in
// rational mode, where elimination is exact).
struct SolveResult {
  ResultKind kind;
  ArithMode mode;
  std::vector<Scalar> values;
  double residual = 0.0;
};

// Returns the default mode for a solve on n vertices: exact rational up to
// n = 200, floating beyond.
ArithMode default_mode(int vertex_count);

// The absorbing-walk system: row `a` pins h_a = 0 and every other row reads
// h_x - sum_y p_xy h_y = rhs_x. The matrix is strictly diagonally dominant in
// the rows that matter, hence nonsingular whenever every vertex reaches `a`.
// One factorization (Gaussian elimination with partial pivoting, pivot ties
// to the lowest row index) is computed on first use and reused across
// right-hand sides. Floating solves carry a mandatory relative residual check
// at 1e-9; failures surface as SolveFailure rather than bad numbers.
class LaplacianSystem {
 public:
  LaplacianSystem(WalkSpec spec, std::optional<ArithMode> mode = {});
  ~LaplacianSystem();
  LaplacianSystem(LaplacianSystem&&) noexcept;
  LaplacianSystem& operator=(LaplacianSystem&&) noexcept;

  const WalkSpec& spec() const { return spec_; }
  ArithMode mode() const { return mode_; }

  // rhs indexed by vertex; the absorbing entry is forced to 0.
  SolveResult solve(std::vector<Scalar> rhs, ResultKind kind) const;

  SolveResult hitting_times() const;
  SolveResult cost_hitting_times(const CostFunction& f) const;
  SolveResult vertex_visit_counts(int x) const;   // expected visits to x per start vertex
  SolveResult edge_visit_counts(int edge) const;  // expected traversals of edge per start vertex

 private:
  struct Impl;
  WalkSpec spec_;
  ArithMode mode_;
  std::unique_ptr<Impl> impl_;
};

// One-shot conveniences over LaplacianSystem.
SolveResult hitting_times(const WalkSpec& spec, std::optional<ArithMode> mode = {});
SolveResult cost_hitting_times(const WalkSpec& spec, const CostFunction& f,
                               std::optional<ArithMode> mode = {});
SolveResult vertex_visit_counts(const WalkSpec& spec, int x, std::optional<ArithMode> mode = {});
SolveResult edge_visit_counts(const WalkSpec& spec, int edge, std::optional<ArithMode> mode = {});

// Probability of reaching `target` before `avoid`, per start vertex. Also the
// voltage profile when target is held at 1 and avoid at 0.
SolveResult hit_before_probability(const Graph& g, const EdgeWeights& w, int target, int avoid,
                                   std::optional<ArithMode> mode = {});

// Expected round trip u -> v -> u.
Scalar commute_time(const Graph& g, const EdgeWeights& w, int u, int v,
                    std::optional<ArithMode> mode = {});

// Electric view: conductance of edge e is w(e). One voltage solve with v at
// 0 and u at 1; resistance is (V_u - V_v) / injected current.
Scalar effective_resistance(const Graph& g, const EdgeWeights& w, int u, int v,
                            std::optional<ArithMode> mode = {});

// Sum of 1/r over directed edges: 2 * sum of weights.
Scalar network_total_conductance(const EdgeWeights& w);

// Stationary distribution of the non-absorbing walk: vertex conductance over
// total conductance. Satisfies detailed balance.
SolveResult stationary_distribution(const Graph& g, const EdgeWeights& w,
                                    std::optional<ArithMode> mode = {});

// Iterative fallback for large sparse floating systems: Gauss-Seidel sweeps
// over the same equations, checked by the same residual gate.
std::vector<double> gauss_seidel_hitting(const WalkSpec& spec, const std::vector<double>& rhs,
                                         double tol = 1e-12, long max_sweeps = 1000000);

}  // namespace walkbound
