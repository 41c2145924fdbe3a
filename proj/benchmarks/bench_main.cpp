// Microbenchmarks for the hot paths: dense solves (factor + one rhs) in both
// arithmetic modes, Monte Carlo walk throughput, and polynomial evaluation.

#include <benchmark/benchmark.h>

#include "walkbound/bounds.hpp"
#include "walkbound/generate.hpp"
#include "walkbound/simulate.hpp"
#include "walkbound/solver.hpp"

namespace wb = walkbound;

namespace {

wb::Instance sized_instance(int n) {
  wb::CampaignConfig cfg;
  cfg.family = wb::InstanceFamily::random_connected;
  cfg.count = 1;
  cfg.n_min = n;
  cfg.n_max = n;
  cfg.extra_edges_max = n;
  cfg.tau_ceiling = wb::Scalar(2);
  cfg.simple_share = 0.0;
  cfg.seed = 12;
  return wb::generate_instance(cfg, 0);
}

void bm_hitting_rational(benchmark::State& state) {
  wb::Instance inst = sized_instance(static_cast<int>(state.range(0)));
  wb::WalkSpec spec(inst.graph, inst.weights, inst.absorbing);
  for (auto _ : state) {
    wb::SolveResult r = wb::hitting_times(spec, wb::ArithMode::rational);
    benchmark::DoNotOptimize(r.values.data());
  }
}
BENCHMARK(bm_hitting_rational)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void bm_hitting_floating(benchmark::State& state) {
  wb::Instance inst = sized_instance(static_cast<int>(state.range(0)));
  wb::WalkSpec spec(inst.graph, inst.weights, inst.absorbing);
  for (auto _ : state) {
    wb::SolveResult r = wb::hitting_times(spec, wb::ArithMode::floating);
    benchmark::DoNotOptimize(r.values.data());
  }
}
BENCHMARK(bm_hitting_floating)->Arg(16)->Arg(64)->Arg(160)->Unit(benchmark::kMillisecond);

void bm_extra_rhs_rational(benchmark::State& state) {
  // Marginal cost of one more right-hand side on a cached factorization.
  wb::Instance inst = sized_instance(static_cast<int>(state.range(0)));
  wb::LaplacianSystem sys(wb::WalkSpec(inst.graph, inst.weights, inst.absorbing),
                          wb::ArithMode::rational);
  sys.hitting_times();  // force the factorization
  for (auto _ : state) {
    wb::SolveResult r = sys.cost_hitting_times(inst.costs);
    benchmark::DoNotOptimize(r.values.data());
  }
}
BENCHMARK(bm_extra_rhs_rational)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void bm_simulate_walks(benchmark::State& state) {
  wb::Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  wb::WalkSpec spec(g, wb::EdgeWeights::unit(g), 0);
  const long long walks = state.range(0);
  for (auto _ : state) {
    wb::EstimateSummary est = wb::estimate_hitting(spec, nullptr, 1, walks, 99);
    benchmark::DoNotOptimize(est.mean);
  }
  state.SetItemsProcessed(state.iterations() * walks);
}
BENCHMARK(bm_simulate_walks)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void bm_poly_F_rational(benchmark::State& state) {
  wb::Scalar t(wb::Rational(3, 2));
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wb::Scalar f = wb::poly_F(t, m);
    benchmark::DoNotOptimize(&f);
  }
}
BENCHMARK(bm_poly_F_rational)->Arg(50)->Arg(200);

void bm_poly_F_floating(benchmark::State& state) {
  wb::Scalar t = wb::Scalar::floating(1.5);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wb::Scalar f = wb::poly_F(t, m);
    benchmark::DoNotOptimize(&f);
  }
}
BENCHMARK(bm_poly_F_floating)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
