// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include <cmath>

#include "zdl/dirichlet.hpp"
#include "zdl/meansquare.hpp"
#include "zdl/quadrature.hpp"
#include "zdl/zeta.hpp"

using namespace zdl;

static void BM_ZetaMainSumSerial(benchmark::State& st) {
  std::vector<cd> out;
  for (auto _ : st) {
    sf::zeta_main_sum_serial({0.5, 1e8}, static_cast<std::uint64_t>(st.range(0)), 2, out);
    benchmark::DoNotOptimize(out.data());
  }
}
static void BM_ZetaMainSumParallel(benchmark::State& st) {
  std::vector<cd> out;
  for (auto _ : st) {
    sf::zeta_main_sum_parallel({0.5, 1e8}, static_cast<std::uint64_t>(st.range(0)), 2, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ZetaMainSumSerial)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ZetaMainSumParallel)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMicrosecond);

static void quad_case(benchmark::State& st, bool parallel) {
  auto f = quad::batch([](double t) { return std::cos(t * std::log(t)) / std::sqrt(t); });
  const auto plan = quad::PanelPlan::for_spacing(10.0, 10.0 + static_cast<double>(st.range(0)), 0.02);
  for (auto _ : st) {
    const auto r = parallel ? quad::integrate_parallel(f, plan) : quad::integrate_serial(f, plan);
    benchmark::DoNotOptimize(r.value);
  }
}
static void BM_PanelQuadSerial(benchmark::State& st) { quad_case(st, false); }
static void BM_PanelQuadParallel(benchmark::State& st) { quad_case(st, true); }
BENCHMARK(BM_PanelQuadSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PanelQuadParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void jz_case(benchmark::State& st, bool parallel) {
  const auto p = mollifier::build_mollifier(1e5, 0.15);
  const WindowSpec w = WindowSpec::from_length(1e5, 2000.0, 0.15);
  ms::IntegrationOptions o;
  o.parallel = parallel;
  o.audit = false;
  for (auto _ : st) benchmark::DoNotOptimize(ms::integrate_JZ(p, w, 0, 0, {}, o).numeric_integral);
}
static void BM_MollifiedJZSerial(benchmark::State& st) { jz_case(st, false); }
static void BM_MollifiedJZParallel(benchmark::State& st) { jz_case(st, true); }
BENCHMARK(BM_MollifiedJZSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MollifiedJZParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
