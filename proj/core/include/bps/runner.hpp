#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bps/engine.hpp"
#include "bps/report.hpp"
#include "bps/scenario.hpp"

namespace bps {

// Fully resolved batch-run configuration. File paths are absolute after
// load_run_config (relative entries resolve against the config file).
struct RunConfig {
  std::uint64_t seed = 1;
  long dt_s = 900;
  Timestamp start = 0;
  long days = 31;
  long warmup_hours = 24;
  std::string out_dir = "out";
  int jobs = 1;
  std::string filter = "*";
  bool write_traces = true;

  std::string weather_file;
  double cold_wave_delta_k = 4.0;

  std::string profile_file;
  int household_size = 4;
  ApplianceTable appliances;

  std::string fabric_worse_file;
  std::string fabric_better_file;

  double design_t_ext = 263.15;  // plant sizing outdoor temperature
  double sizing_margin = 1.2;
  double loop_mass_kg = 150.0;
  HeatPumpParams heat_pump;  // q_rated 0 means "derive from the sizing rule"
  BoilerParams boiler;       // likewise
  double radiator_band_k = 2.0;
  double radiator_ua_fraction_heat_pump = 0.125;
  double radiator_ua_fraction_boiler = 0.1;

  PvArray pv;
  BatteryState battery_template;  // soc filled from initial_soc_fraction
  double battery_initial_soc_fraction = 0.5;

  ControlConfig control;
  Tariffs tariffs;
};

RunConfig load_run_config(const std::string& path);

// Fabric preset file loader (JSON, documented schema).
BuildingFabric load_fabric_file(const std::string& path);

// Data shared by all scenarios of a run: parsed weather for both variants,
// presence profiles per occupancy pattern, fabric presets, and plants sized
// for each fabric/plant-type combination.
struct RunAssets {
  WeatherSeries weather_normal;
  WeatherSeries weather_cold;
  PresenceProfile presence_normal;
  PresenceProfile presence_vacation;
  PresenceProfile presence_everyone_home;
  BuildingFabric fabric_worse;
  BuildingFabric fabric_better;
  PlantConfig boiler_worse;
  PlantConfig boiler_better;
  PlantConfig heat_pump_worse;
  PlantConfig heat_pump_better;
};

RunAssets load_assets(const RunConfig& config);

// Steady-state heating power that holds t_air_target at the given boundary
// temperatures with no gains; the plant sizing rule scales this.
double design_heat_load(const FiveR1CNetwork& net, double t_ext, double t_air_target);

// Simulation input for one matrix cell.
SimulationInput assemble(const RunConfig& config, const RunAssets& assets,
                         const ScenarioSpec& spec);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> messages;
  std::string rendered() const;
};

// Dry run: resolves every asset and checks cross-field invariants without
// simulating. Problems are reported, not thrown.
ValidationReport validate_run(const RunConfig& config);

struct RunOutput {
  std::vector<ScenarioResult> results;
  std::vector<std::string> codes;
  double elapsed_s = 0.0;
};

// Simulates every scenario matching the filter (fan-out across `jobs`
// threads), then writes traces, charts, and results.csv from the calling
// thread. Throws on the first collected error, naming scenario and step.
RunOutput run(const RunConfig& config);

}  // namespace bps
