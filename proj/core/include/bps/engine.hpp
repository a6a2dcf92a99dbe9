#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bps/control.hpp"
#include "bps/electrical.hpp"
#include "bps/envelope.hpp"
#include "bps/occupancy.hpp"
#include "bps/plant.hpp"
#include "bps/weather.hpp"

namespace bps {

enum class PlantType { gas_boiler, heat_pump };

struct PlantConfig {
  PlantType type = PlantType::gas_boiler;
  HeatPumpParams heat_pump;
  BoilerParams boiler;
  RadiatorParams radiator;
  double loop_mass_kg = 150.0;
  FuelConstants fuel;
};

struct ElectricalConfig {
  bool has_pv = false;
  PvArray pv;
  BatteryState battery;  // initial state; zero capacity degenerates to grid-only
};

struct ControlConfig {
  ThermostatState thermostat;
  SetpointSchedule schedule;
};

// Everything one simulation needs. The weather series is borrowed (shared
// across scenarios); all other members are owned copies.
struct SimulationInput {
  const WeatherSeries* weather = nullptr;
  BuildingFabric fabric;
  PlantConfig plant;
  ElectricalConfig electrical;
  ControlConfig control;
  PresenceProfile presence;
  ApplianceTable appliances;
  Timestamp start = 0;
  long dt_s = 900;
  long steps = 2976;
  std::uint64_t presence_seed = 0;
};

struct TraceRecord {
  Timestamp timestamp = 0;
  double t_air = 0.0;
  double t_sur = 0.0;
  double t_mas = 0.0;
  double t_ext = 0.0;
  bool heating_on = false;
  double phi_hc = 0.0;           // W
  double p_electric_plant = 0.0; // W
  double fuel_mass = 0.0;        // kg burned this step
  double p_appliance = 0.0;      // W
  int occupants = 0;
  double p_pv = 0.0;             // W
  double p_char = 0.0;           // W
  double p_disc = 0.0;           // W
  double p_feed = 0.0;           // W, signed
  double soc = 0.0;              // kWh
};

struct SimulationTrace {
  Timestamp start = 0;
  long dt_s = 900;
  std::vector<TraceRecord> records;
};

// Fixed-order co-simulation: weather, occupancy, solar, controls (on the
// previous air temperature), plant, radiator/zone, electrical dispatch. The
// radiator valve and the algebraic air node are solved together inside the
// step; everything else couples with a one-step lag. Deterministic for a
// given input and seed.
SimulationTrace simulate(const SimulationInput& input);

std::string trace_to_csv(const SimulationTrace& trace);

}  // namespace bps
