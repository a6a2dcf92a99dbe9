#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "bps/csv.hpp"
#include "bps/runner.hpp"

namespace {

const std::string repo_root = BPS_REPO_ROOT;

bps::RunConfig base_config() {
  return bps::load_run_config(repo_root + "/config/default.json");
}

void bm_zone_step(benchmark::State& state) {
  const auto fabric = bps::load_fabric_file(repo_root + "/data/fabric/worse.json");
  const auto net = bps::build_network(fabric);
  bps::ZoneState z;
  double t_ext = 271.0;
  for (auto _ : state) {
    z = bps::step_zone(net, z, t_ext, t_ext, 400.0, 150.0, 5000.0, 900.0);
    t_ext += 1e-9;  // defeat constant folding across iterations
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(bm_zone_step);

void bm_dispatch(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> power(0.0, 12000.0);
  bps::BatteryState battery;
  for (auto _ : state) {
    auto r = bps::dispatch(power(rng), power(rng), battery, 900.0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_dispatch);

void bm_weather_parse(benchmark::State& state) {
  const auto config = base_config();
  const std::string content = bps::csv::read_file(config.weather_file);
  for (auto _ : state) {
    auto series = bps::parse_weather(content, bps::WeatherFormat::canonical_csv);
    benchmark::DoNotOptimize(series);
  }
}
BENCHMARK(bm_weather_parse)->Unit(benchmark::kMillisecond);

void bm_scenario_month(benchmark::State& state) {
  const auto config = base_config();
  const auto assets = bps::load_assets(config);
  const auto spec = bps::parse_code("B1O1W1", config.seed);
  const auto input = bps::assemble(config, assets, spec);
  for (auto _ : state) {
    auto trace = bps::simulate(input);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(bm_scenario_month)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
