#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bps/engine.hpp"
#include "bps/plant.hpp"

namespace bps {

// One cell of the 6 x 3 x 2 study matrix. Building variants B1..B6 pair an
// insulation preset with a plant type and a PV/battery flag: B1/B4 gas
// boiler, B2/B5 heat pump, B3/B6 heat pump with PV and battery; B1-B3 use
// the worse fabric, B4-B6 the better one.
struct ScenarioSpec {
  int building = 1;   // 1..6
  int occupancy = 1;  // 1 normal, 2 vacation, 3 everyone home
  int weather = 1;    // 1 normal, 2 cold wave
  std::uint64_t presence_seed = 0;

  std::string code() const;
  bool uses_boiler() const { return building == 1 || building == 4; }
  bool has_pv() const { return building == 3 || building == 6; }
  bool better_fabric() const { return building >= 4; }
};

struct Tariffs {
  double elec_price = 0.3986;    // EUR/kWh drawn
  double gas_price = 0.02907;    // EUR/kWh fuel energy
  double feed_in_tariff = 0.0;   // EUR/kWh exported
  double elec_co2 = 0.380;       // kg CO2 per kWh drawn
  FuelConstants fuel;
};

struct ScenarioResult {
  std::string code;
  double v_gas_m3 = 0.0;
  double e_load_kwh = 0.0;  // appliance energy, negative = consumed
  double e_gen_kwh = 0.0;   // PV energy
  double e_feed_kwh = 0.0;  // net grid exchange, positive fed in
  double co2_t = 0.0;
  double cost_eur = 0.0;
};

// Full Cartesian product in row order B outer, O middle, W inner. The
// presence seed depends only on the master seed and the occupancy pattern,
// so appliance energy matches across building and weather variants.
std::vector<ScenarioSpec> build_matrix(std::uint64_t master_seed);

// Inverse of ScenarioSpec::code for strings like "B1O1W1".
ScenarioSpec parse_code(const std::string& code, std::uint64_t master_seed = 0);

// Seed for one occupancy pattern under a master seed.
std::uint64_t presence_seed_for(std::uint64_t master_seed, int occupancy_variant);

// Emission and cost from monthly totals. e_feed is the signed net grid
// exchange; only net draw is billed and taxed, exports earn the feed-in
// tariff (zero by default).
struct CostBreakdown {
  double co2_t = 0.0;
  double cost_eur = 0.0;
};
CostBreakdown account_from_totals(double v_gas_m3, double e_feed_kwh, const Tariffs& tariffs,
                                  double exported_kwh = 0.0);

// Aggregates a trace into the result row for one scenario.
ScenarioResult account(const SimulationTrace& trace, const Tariffs& tariffs,
                       const std::string& code = "");

// Shell-style matching with '*' and '?' used for scenario filters.
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace bps
