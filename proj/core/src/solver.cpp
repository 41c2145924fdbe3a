#include "walkbound/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "walkbound/errors.hpp"

namespace walkbound {

const char* result_kind_name(ResultKind k) {
  switch (k) {
    case ResultKind::hitting: return "hitting";
    case ResultKind::cost_hitting: return "cost-hitting";
    case ResultKind::vertex_visits: return "vertex-visits";
    case ResultKind::edge_visits: return "edge-visits";
    case ResultKind::probability: return "probability";
    case ResultKind::stationary: return "stationary";
    case ResultKind::voltage: return "voltage";
  }
  return "values";
}

ArithMode default_mode(int vertex_count) {
  return vertex_count <= 200 ? ArithMode::rational : ArithMode::floating;
}

namespace {

constexpr double kResidualGate = 1e-9;

// Dense Gaussian elimination with partial pivoting over Scalar, shared by the
// absorbing system and the two-pin voltage systems. Pivot scan keeps the
// first (lowest-index) row among equal magnitudes, so factorizations are
// reproducible in both modes. Zero multipliers are skipped, which makes
// near-tridiagonal systems (paths, trees) effectively O(n^2).
class DenseSolver {
 public:
  DenseSolver(int n, ArithMode mode)
      : n_(n), mode_(mode), a_(static_cast<size_t>(n) * n, Scalar(0)) {
    if (mode_ == ArithMode::floating)
      for (Scalar& s : a_) s = Scalar::floating(0.0);
  }

  ArithMode mode() const { return mode_; }
  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

  void factor() {
    if (mode_ == ArithMode::floating) {
      orig_.resize(a_.size());
      for (size_t i = 0; i < a_.size(); ++i) orig_[i] = a_[i].to_double();
    }
    perm_.resize(n_);
    for (int i = 0; i < n_; ++i) perm_[i] = i;
    Scalar zero(0);
    if (mode_ == ArithMode::floating) zero = Scalar::floating(0.0);
    for (int k = 0; k < n_; ++k) {
      int pivot = -1;
      Scalar best = zero;
      for (int r = k; r < n_; ++r) {
        Scalar mag = abs(at(r, k));
        if (pivot < 0 || mag > best) {
          pivot = r;
          best = mag;
        }
      }
      if (!(best > zero)) fail(Errc::solve_failure, "singular system (zero pivot column)");
      if (pivot != k) {
        std::swap(perm_[k], perm_[pivot]);
        for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(pivot, c));
      }
      for (int r = k + 1; r < n_; ++r) {
        if (at(r, k) == zero) continue;
        Scalar m = at(r, k) / at(k, k);
        at(r, k) = m;
        for (int c = k + 1; c < n_; ++c) {
          if (at(k, c) == zero) continue;
          at(r, c) -= m * at(k, c);
        }
      }
    }
    factored_ = true;
  }

  std::vector<Scalar> solve(const std::vector<Scalar>& b) const {
    Scalar zero = mode_ == ArithMode::floating ? Scalar::floating(0.0) : Scalar(0);
    std::vector<Scalar> x(n_, zero);
    for (int i = 0; i < n_; ++i) x[i] = b[perm_[i]].converted(mode_);
    for (int r = 1; r < n_; ++r)
      for (int c = 0; c < r; ++c) {
        if (at(r, c) == zero || x[c] == zero) continue;
        x[r] -= at(r, c) * x[c];
      }
    for (int r = n_ - 1; r >= 0; --r) {
      for (int c = r + 1; c < n_; ++c) {
        if (at(r, c) == zero || x[c] == zero) continue;
        x[r] -= at(r, c) * x[c];
      }
      x[r] /= at(r, r);
    }
    if (mode_ == ArithMode::floating) last_residual_ = gate_residual(b, x);
    return x;
  }

  double last_residual() const { return last_residual_; }

 private:
  double gate_residual(const std::vector<Scalar>& b, const std::vector<Scalar>& x) const {
    double num = 0.0, norm_a = 0.0, norm_x = 0.0, norm_b = 0.0;
    for (int r = 0; r < n_; ++r) {
      double row = 0.0, row_norm = 0.0;
      for (int c = 0; c < n_; ++c) {
        double a = orig_[static_cast<size_t>(r) * n_ + c];
        row += a * x[c].to_double();
        row_norm += std::abs(a);
      }
      double bi = b[r].to_double();
      num = std::max(num, std::abs(row - bi));
      norm_a = std::max(norm_a, row_norm);
      norm_x = std::max(norm_x, std::abs(x[r].to_double()));
      norm_b = std::max(norm_b, std::abs(bi));
    }
    double rel = num / std::max(norm_a * norm_x + norm_b, 1e-300);
    if (rel > kResidualGate)
      fail(Errc::solve_failure, "floating solve rejected, relative residual " + format_double(rel));
    return rel;
  }

  int n_;
  ArithMode mode_;
  std::vector<Scalar> a_;
  std::vector<int> perm_;
  std::vector<double> orig_;
  bool factored_ = false;
  mutable double last_residual_ = 0.0;
};

void require_all_reach(const Graph& g, int a) {
  std::vector<int> dist = bfs_distances(g, a);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] < 0)
      fail(Errc::unreachable,
           "vertex '" + g.label(v) + "' cannot reach '" + g.label(a) + "'");
}

}  // namespace

struct LaplacianSystem::Impl {
  DenseSolver solver;
  TransitionMatrix p;
  Impl(int n, ArithMode mode) : solver(n, mode) {}
};

LaplacianSystem::LaplacianSystem(WalkSpec spec, std::optional<ArithMode> mode)
    : spec_(std::move(spec)), mode_(mode.value_or(default_mode(spec_.graph.vertex_count()))) {
  const Graph& g = spec_.graph;
  require_all_reach(g, spec_.absorbing);
  impl_ = std::make_unique<Impl>(g.vertex_count(), mode_);
  impl_->p = transition_probabilities(g, spec_.weights, spec_.absorbing, mode_);
  Scalar one = mode_ == ArithMode::floating ? Scalar::floating(1.0) : Scalar(1);
  for (int x = 0; x < g.vertex_count(); ++x) {
    impl_->solver.at(x, x) = one;
    for (const auto& [y, p] : impl_->p.rows[x]) impl_->solver.at(x, y) = -p;
  }
  impl_->solver.factor();
}

LaplacianSystem::~LaplacianSystem() = default;
LaplacianSystem::LaplacianSystem(LaplacianSystem&&) noexcept = default;
LaplacianSystem& LaplacianSystem::operator=(LaplacianSystem&&) noexcept = default;

SolveResult LaplacianSystem::solve(std::vector<Scalar> rhs, ResultKind kind) const {
  const int n = spec_.graph.vertex_count();
  if (static_cast<int>(rhs.size()) != n)
    fail(Errc::invalid_argument, "right-hand side size does not match vertex count");
  rhs[spec_.absorbing] = Scalar(0);
  SolveResult out;
  out.kind = kind;
  out.mode = mode_;
  out.values = impl_->solver.solve(rhs);
  out.residual = impl_->solver.last_residual();
  return out;
}

SolveResult LaplacianSystem::hitting_times() const {
  std::vector<Scalar> rhs(spec_.graph.vertex_count(), Scalar(1));
  return solve(std::move(rhs), ResultKind::hitting);
}

SolveResult LaplacianSystem::cost_hitting_times(const CostFunction& f) const {
  const Graph& g = spec_.graph;
  if (f.size() != g.edge_count()) fail(Errc::invalid_argument, "costs do not match graph");
  std::vector<Scalar> rhs(g.vertex_count(), Scalar(0));
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x == spec_.absorbing) continue;
    Scalar s(0);
    for (const auto& [y, p] : impl_->p.rows[x]) s += p * f[g.edge_index(x, y)].converted(mode_);
    rhs[x] = s;
  }
  return solve(std::move(rhs), ResultKind::cost_hitting);
}

SolveResult LaplacianSystem::vertex_visit_counts(int x) const {
  const Graph& g = spec_.graph;
  if (x < 0 || x >= g.vertex_count()) fail(Errc::invalid_argument, "vertex out of range");
  if (x == spec_.absorbing)
    fail(Errc::invalid_argument, "visit counts are defined for non-absorbing vertices");
  std::vector<Scalar> rhs(g.vertex_count(), Scalar(0));
  rhs[x] = Scalar(1);
  return solve(std::move(rhs), ResultKind::vertex_visits);
}

SolveResult LaplacianSystem::edge_visit_counts(int edge) const {
  const Graph& g = spec_.graph;
  if (edge < 0 || edge >= g.edge_count()) fail(Errc::invalid_argument, "edge index out of range");
  // Traversals of e = {x,z} decompose over visits: each visit to x crosses e
  // with probability p_xz and likewise from z, so the right-hand side is
  // p_xz e_x + p_zx e_z. The absorbing endpoint contributes nothing (its
  // transition row is empty).
  const Edge& e = g.edge(edge);
  std::vector<Scalar> rhs(g.vertex_count(), Scalar(0));
  for (int end = 0; end < 2; ++end) {
    int x = end == 0 ? e.u : e.v;
    int z = end == 0 ? e.v : e.u;
    for (const auto& [y, p] : impl_->p.rows[x])
      if (y == z) rhs[x] = p;
  }
  return solve(std::move(rhs), ResultKind::edge_visits);
}

SolveResult hitting_times(const WalkSpec& spec, std::optional<ArithMode> mode) {
  return LaplacianSystem(spec, mode).hitting_times();
}

SolveResult cost_hitting_times(const WalkSpec& spec, const CostFunction& f,
                               std::optional<ArithMode> mode) {
  return LaplacianSystem(spec, mode).cost_hitting_times(f);
}

SolveResult vertex_visit_counts(const WalkSpec& spec, int x, std::optional<ArithMode> mode) {
  return LaplacianSystem(spec, mode).vertex_visit_counts(x);
}

SolveResult edge_visit_counts(const WalkSpec& spec, int edge, std::optional<ArithMode> mode) {
  return LaplacianSystem(spec, mode).edge_visit_counts(edge);
}

namespace {

// Voltage-style solve: pinned vertices get identity rows and fixed values,
// interior vertices of live components get harmonic rows, vertices of
// components without a pin are pinned to 0.
SolveResult two_pin_solve(const Graph& g, const EdgeWeights& w, int hot, int ground,
                          std::optional<ArithMode> mode_opt, ResultKind kind) {
  if (hot == ground) fail(Errc::invalid_argument, "the two pinned vertices must differ");
  const int n = g.vertex_count();
  ArithMode mode = mode_opt.value_or(default_mode(n));
  TransitionMatrix p = transition_probabilities(g, w, -1, mode);
  std::vector<char> live(n, 0);
  for (int v : g.component_of(hot)) live[v] = 1;
  for (int v : g.component_of(ground)) live[v] = 1;

  DenseSolver solver(n, mode);
  Scalar one = mode == ArithMode::floating ? Scalar::floating(1.0) : Scalar(1);
  std::vector<Scalar> rhs(n, Scalar(0));
  for (int x = 0; x < n; ++x) {
    if (x == hot || x == ground || !live[x]) {
      solver.at(x, x) = one;
      continue;
    }
    solver.at(x, x) = one;
    for (const auto& [y, pxy] : p.rows[x]) solver.at(x, y) = -pxy;
  }
  rhs[hot] = Scalar(1);
  solver.factor();
  SolveResult out;
  out.kind = kind;
  out.mode = mode;
  out.values = solver.solve(rhs);
  out.residual = solver.last_residual();
  return out;
}

}  // namespace

SolveResult hit_before_probability(const Graph& g, const EdgeWeights& w, int target, int avoid,
                                   std::optional<ArithMode> mode) {
  return two_pin_solve(g, w, target, avoid, mode, ResultKind::probability);
}

Scalar commute_time(const Graph& g, const EdgeWeights& w, int u, int v,
                    std::optional<ArithMode> mode) {
  if (u == v) return Scalar(0);
  SolveResult to_v = hitting_times(WalkSpec(g, w, v), mode);
  SolveResult to_u = hitting_times(WalkSpec(g, w, u), mode);
  return to_v.values[u] + to_u.values[v];
}

Scalar effective_resistance(const Graph& g, const EdgeWeights& w, int u, int v,
                            std::optional<ArithMode> mode) {
  if (u == v) return Scalar(0);
  bool reachable = false;
  for (int x : g.component_of(u)) reachable |= (x == v);
  if (!reachable)
    fail(Errc::unreachable, "'" + g.label(u) + "' and '" + g.label(v) + "' are not connected");
  SolveResult volt = two_pin_solve(g, w, u, v, mode, ResultKind::voltage);
  // Injected current at the hot pin under unit potential difference.
  Scalar current(0);
  for (auto [y, e] : g.neighbors(u))
    current += w[e].converted(volt.mode) * (volt.values[u] - volt.values[y]);
  if (!(current > Scalar(0))) fail(Errc::solve_failure, "nonpositive injected current");
  return Scalar(1).converted(volt.mode) / current;
}

Scalar network_total_conductance(const EdgeWeights& w) {
  Scalar total(0);
  for (int e = 0; e < w.size(); ++e) total += w[e];
  return Scalar(2) * total;
}

SolveResult stationary_distribution(const Graph& g, const EdgeWeights& w,
                                    std::optional<ArithMode> mode_opt) {
  if (g.edge_count() == 0)
    fail(Errc::invalid_argument, "stationary distribution needs at least one edge");
  ArithMode mode = mode_opt.value_or(w.mode());
  Scalar total = network_total_conductance(w).converted(mode);
  SolveResult out;
  out.kind = ResultKind::stationary;
  out.mode = mode;
  out.values.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    Scalar cv(0);
    for (auto [y, e] : g.neighbors(v)) {
      (void)y;
      cv += w[e].converted(mode);
    }
    out.values.push_back(cv / total);
  }
  return out;
}

std::vector<double> gauss_seidel_hitting(const WalkSpec& spec, const std::vector<double>& rhs,
                                         double tol, long max_sweeps) {
  const Graph& g = spec.graph;
  const int n = g.vertex_count();
  if (static_cast<int>(rhs.size()) != n)
    fail(Errc::invalid_argument, "right-hand side size does not match vertex count");
  require_all_reach(g, spec.absorbing);
  TransitionMatrix tp = transition_probabilities(g, spec.weights, spec.absorbing,
                                                 ArithMode::floating);
  std::vector<std::vector<std::pair<int, double>>> p(n);
  for (int x = 0; x < n; ++x)
    for (const auto& [y, pxy] : tp.rows[x]) p[x].push_back({y, pxy.to_double()});

  std::vector<double> h(n, 0.0);
  for (long sweep = 0; sweep < max_sweeps; ++sweep) {
    double delta = 0.0;
    for (int x = 0; x < n; ++x) {
      if (x == spec.absorbing) continue;
      double s = rhs[x];
      for (const auto& [y, pxy] : p[x]) s += pxy * h[y];
      delta = std::max(delta, std::abs(s - h[x]));
      h[x] = s;
    }
    if (delta <= tol) break;
  }
  double num = 0.0, norm_b = 0.0, norm_x = 0.0;
  for (int x = 0; x < n; ++x) {
    double row = h[x];
    if (x != spec.absorbing)
      for (const auto& [y, pxy] : p[x]) row -= pxy * h[y];
    num = std::max(num, std::abs(row - (x == spec.absorbing ? 0.0 : rhs[x])));
    norm_b = std::max(norm_b, std::abs(rhs[x]));
    norm_x = std::max(norm_x, std::abs(h[x]));
  }
  double rel = num / std::max(2.0 * norm_x + norm_b, 1e-300);
  if (rel > kResidualGate)
    fail(Errc::solve_failure,
         "iterative solve did not converge, relative residual " + format_double(rel));
  return h;
}

}  // namespace walkbound
