#pragma once

#include <vector>

namespace bps {

// Shared hydronic state. Heat-pump configurations maintain t_loop directly;
// boiler configurations keep the radiator loop merged with the buffer tank,
// so t_loop mirrors t_tank.
struct HydronicState {
  double t_loop = 293.15;  // K
  double t_tank = 333.15;  // K
  bool burner_on = false;
  double m_dot = 0.0;      // current radiator flow, kg/s
};

struct HeatPumpParams {
  double q_rated = 0.0;         // W
  double eta_carnot = 0.45;
  double t_source = 283.15;     // ground loop, K
  double t_supply_set = 318.15; // K
};

struct EfficiencyPoint {
  double plr = 0.0;  // part-load ratio
  double eta = 0.0;  // fuel-to-water efficiency, higher-heating-value basis
};

struct BoilerParams {
  double q_rated = 0.0;  // W
  std::vector<EfficiencyPoint> efficiency_curve;
  double tank_volume = 0.3;       // m3
  double tank_on_below = 328.15;  // K
  double tank_off_above = 338.15; // K
  double min_plr = 0.2;           // modulation floor
};

struct FuelConstants {
  double hhv = 55.5e6;     // J/kg
  double co2_per_kg = 2.23;
  double density = 0.84;   // kg/m3
};

struct RadiatorParams {
  double ua = 0.0;        // W/K
  double max_flow = 0.0;  // kg/s
  double band = 2.0;      // proportional band below the setpoint, K
};

struct PlantFlows {
  double q_delivered = 0.0;  // W into the water
  double p_electric = 0.0;   // W
  double fuel_mass = 0.0;    // kg burned this step
};

struct RadiatorEmission {
  double phi_hc = 0.0;  // W into the zone
  double m_dot = 0.0;   // kg/s
};

// Carnot-fraction coefficient of performance, clamped to [1, 8].
double cop(double t_source, double t_sink, double eta_carnot);

// Piecewise-linear lookup on the efficiency curve, clamped at the ends.
double boiler_efficiency(const BoilerParams& params, double plr);

// Heats the loop water toward the supply setpoint while demand is on.
// Electricity is taken at the COP against the post-heating loop temperature.
PlantFlows heat_pump_step(const HeatPumpParams& params, HydronicState& state, bool demand_on,
                          double loop_mass_kg, double dt);

// Tank-hysteresis burner with modulation: fires below tank_on_below, stops
// above tank_off_above, and throttles so one step cannot overshoot the top
// of the band (not below the modulation floor).
PlantFlows boiler_step(const BoilerParams& params, HydronicState& state,
                       const FuelConstants& fuel, double water_mass_kg, double dt);

// Valve-limited radiator output at a candidate air temperature; pure, so a
// coupled zone/emitter solve can probe it repeatedly.
RadiatorEmission radiator_emission(double t_store, double t_air, double t_set,
                                   const RadiatorParams& params, double water_mass_kg,
                                   double dt);

// Removes the emitted energy from the store temperature.
void radiator_apply(double& t_store, double water_mass_kg, double phi_hc, double dt);

double gas_volume_from_mass(double fuel_mass_kg, const FuelConstants& fuel);
double gas_volume_from_energy(double fuel_energy_j, const FuelConstants& fuel);

}  // namespace bps
