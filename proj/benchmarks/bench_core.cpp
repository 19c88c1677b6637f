#include <benchmark/benchmark.h>

#include "elax/concentration.hpp"
#include "elax/diagnostics.hpp"
#include "elax/dynamics.hpp"
#include "elax/scenario.hpp"
#include "elax/simulation.hpp"

using namespace elax;

static void BM_GhostFill(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, n, n);
  Field f = grid.make_field(1.0);
  GhostSpec spec{Parity::odd, 0.0, nullptr, OuterBc::dirichlet, 0.0, nullptr};
  for (auto _ : state) {
    fill_ghosts(f, grid, spec);
    benchmark::DoNotOptimize(f(0, 0));
  }
}
BENCHMARK(BM_GhostFill)->Arg(64)->Arg(256);

static void BM_CoupledStep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, n, n);
  Scenario sc = make_scenario("vortex_ring", ScenarioParams{}, grid);
  RunParameters p;
  p.mode = RunParameters::Mode::gl;
  p.epsilon = 0.1;
  p.dt = 0.5 * stable_dt_bound(grid, p, 1.0);
  Stepper stepper(grid, p, sc.bc);
  SystemState init = initial_state(sc, grid, p.mode);
  for (auto _ : state) {
    SystemState s = init;
    stepper.step(s);
    benchmark::DoNotOptimize(s.flow.psi(0, 0));
  }
}
BENCHMARK(BM_CoupledStep)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_EricksenForce(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, n, n);
  Scenario sc = make_scenario("hedgehog", ScenarioParams{}, grid);
  RunParameters p;
  p.mode = RunParameters::Mode::gl;
  p.epsilon = 0.1;
  p.dt = 0.5 * stable_dt_bound(grid, p, 0.0);
  Stepper stepper(grid, p, sc.bc);
  SystemState init = initial_state(sc, grid, p.mode);
  for (auto _ : state) {
    ForceField f = stepper.ericksen_force(init.director);
    benchmark::DoNotOptimize(f.f_r(0, 0));
  }
}
BENCHMARK(BM_EricksenForce)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_ThetaMax(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, n, n);
  Field f = grid.make_field(0.5);
  SearchBox box{0.1, 0.9, 0.1, 0.9};
  for (auto _ : state) {
    ThetaResult r = theta_max(f, grid, box, 0.1);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_ThetaMax)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
