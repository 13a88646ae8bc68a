#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "charvar/census.hpp"
#include "charvar/smith.hpp"

using namespace charvar;

namespace {

Arrangement load(const std::string& name) {
  std::ifstream in(std::string(CHARVAR_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

void BM_WiringAndPresentation(benchmark::State& state) {
  const Arrangement arr = load("suciu.json");
  for (auto _ : state) benchmark::DoNotOptimize(randell_presentation(wiring_diagram(arr, std::uint64_t{1})));
}
BENCHMARK(BM_WiringAndPresentation);

void BM_TorsionScan(benchmark::State& state) {
  const Arrangement arr = load("suciu.json");
  const CohomologyOracle oracle = arrangement_oracle(arr, 1);
  ScanOptions opt;
  opt.order = state.range(0);
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(torsion_scan(oracle, opt));
}
BENCHMARK(BM_TorsionScan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> entry(-20, 20);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_Census(benchmark::State& state) {
  const Arrangement arr = load("suciu.json");
  for (auto _ : state) benchmark::DoNotOptimize(run_census(arr, {}));
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
