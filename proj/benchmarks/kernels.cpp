#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tenom/cases.hpp"
#include "tenom/integrator.hpp"
#include "tenom/scheme.hpp"

namespace {

// Smooth windows take the linear path; step windows exercise the limiters.
std::vector<double> windows(int width, bool smooth, int count) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(width * count));
  for (int k = 0; k < count; ++k) {
    const double p = phase(rng);
    for (int j = 0; j < width; ++j) {
      out.push_back(smooth ? std::sin(p + 0.1 * j) : (j > width / 2 ? 1.0 : 0.0) + 0.01 * std::sin(p + j));
    }
  }
  return out;
}

void BM_ReconstructInterface(benchmark::State& state, std::string name, bool smooth) {
  const auto cfg = tenom::SchemeConfig::from_name(name);
  const int width = cfg.window_width();
  constexpr int count = 1024;
  const auto w = windows(width, smooth, count);
  for (auto _ : state) {
    for (int k = 0; k < count; ++k) {
      benchmark::DoNotOptimize(tenom::reconstruct_interface(w.data() + k * width, cfg));
    }
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_SodStep(benchmark::State& state, std::string name) {
  const auto spec = tenom::bench::make_case("sod");
  const auto problem =
      tenom::bench::make_problem(spec, tenom::SchemeConfig::from_name(name), static_cast<int>(state.range(0)), 1);
  tenom::Solver solver(problem, tenom::bench::initial_field(spec, problem.grid));
  const double dt = solver.compute_dt(0.4);
  for (auto _ : state) solver.step(dt);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void register_all() {
  for (const auto& name : tenom::scheme_names()) {
    benchmark::RegisterBenchmark(("reconstruct/smooth/" + name).c_str(), BM_ReconstructInterface, name, true);
    benchmark::RegisterBenchmark(("reconstruct/step/" + name).c_str(), BM_ReconstructInterface, name, false);
    benchmark::RegisterBenchmark(("sod_step/" + name).c_str(), BM_SodStep, name)->Arg(200)->Arg(800);
  }
}

const bool registered = (register_all(), true);

}  // namespace

BENCHMARK_MAIN();
