#include <benchmark/benchmark.h>

#include <cmath>

#include "walker/bessel.hpp"
#include "walker/integrator.hpp"
#include "walker/quadrature.hpp"

using namespace walker;

static void BM_BesselJ1(benchmark::State& state) {
  double x = 0.1;
  double acc = 0.0;
  for (auto _ : state) {
    acc += bessel_j1(x);
    x += 0.013;
    if (x > 14.0) x = 0.1;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_BesselJ1);

// One memory-force evaluation over a full window of a circling path.
static void BM_MemoryForce(benchmark::State& state) {
  ModelParams p;
  p.dim = static_cast<int>(state.range(0));
  const Model m = Model::canonical(p);
  const double dt = 1.0 / 64;
  const std::size_t W = 19 * 64;
  HistoryBuffer h(W, dt);
  for (std::size_t i = 0; i <= W; ++i) {
    const double t = static_cast<double>(i) * dt;
    h.push(p.dim == 2 ? Vec2{0.92 * std::cos(0.82 * t), 0.92 * std::sin(0.82 * t)} : Vec2{std::sin(t), 0.0});
  }
  const PastContribution past(InitialPast::zero(), m, dt, W);
  for (auto _ : state) benchmark::DoNotOptimize(memory_force(W + 10, h, past, m));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(W));
}
BENCHMARK(BM_MemoryForce)->Arg(1)->Arg(2);

static void BM_Simulate(benchmark::State& state) {
  SimConfig c;
  c.model = Model::canonical(ModelParams{});
  c.t_max = 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c).positions.back());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 640);
}
BENCHMARK(BM_Simulate)->Unit(benchmark::kMillisecond);

static void BM_GaussLaguerreBuild(benchmark::State& state) {
  // The cache makes repeated calls free; time the first build by varying n.
  std::size_t n = 200;
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(n++).size());
}
BENCHMARK(BM_GaussLaguerreBuild)->Iterations(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
