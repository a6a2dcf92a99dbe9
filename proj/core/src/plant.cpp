#include "bps/plant.hpp"

#include <algorithm>
#include <cmath>

#include "bps/common.hpp"

namespace bps {

double cop(double t_source, double t_sink, double eta_carnot) {
  if (!(t_sink > t_source))
    throw ArgumentError("heat-pump sink temperature must exceed the source temperature");
  const double carnot = t_sink / (t_sink - t_source);
  return std::clamp(eta_carnot * carnot, 1.0, 8.0);
}

double boiler_efficiency(const BoilerParams& params, double plr) {
  const auto& curve = params.efficiency_curve;
  if (curve.empty()) throw ConfigError("boiler efficiency curve is empty");
  for (std::size_t i = 1; i < curve.size(); ++i)
    if (!(curve[i].plr > curve[i - 1].plr))
      throw ConfigError("boiler efficiency curve must be sorted by part-load ratio");
  for (const auto& pt : curve)
    if (!(pt.eta > 0.0 && pt.eta <= 1.0))
      throw ConfigError("boiler efficiency must lie in (0, 1]");
  if (plr <= curve.front().plr) return curve.front().eta;
  if (plr >= curve.back().plr) return curve.back().eta;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (plr <= curve[i].plr) {
      const double f = (plr - curve[i - 1].plr) / (curve[i].plr - curve[i - 1].plr);
      return curve[i - 1].eta + f * (curve[i].eta - curve[i - 1].eta);
    }
  }
  return curve.back().eta;
}

PlantFlows heat_pump_step(const HeatPumpParams& params, HydronicState& state, bool demand_on,
                          double loop_mass_kg, double dt) {
  if (!(dt > 0.0) || !(loop_mass_kg > 0.0))
    throw ArgumentError("heat pump step needs positive dt and water mass");
  PlantFlows flows;
  if (params.q_rated <= 0.0 || !demand_on || state.t_loop >= params.t_supply_set) return flows;
  const double heat_capacity = loop_mass_kg * constants::water_cp;
  const double q_to_setpoint = heat_capacity * (params.t_supply_set - state.t_loop) / dt;
  flows.q_delivered = std::min(params.q_rated, q_to_setpoint);
  state.t_loop += flows.q_delivered * dt / heat_capacity;
  flows.p_electric =
      flows.q_delivered / cop(params.t_source, state.t_loop, params.eta_carnot);
  return flows;
}

PlantFlows boiler_step(const BoilerParams& params, HydronicState& state,
                       const FuelConstants& fuel, double water_mass_kg, double dt) {
  if (!(dt > 0.0) || !(water_mass_kg > 0.0))
    throw ArgumentError("boiler step needs positive dt and water mass");
  if (!(params.tank_on_below < params.tank_off_above))
    throw ConfigError("tank hysteresis band is empty");
  if (state.t_tank < params.tank_on_below)
    state.burner_on = true;
  else if (state.t_tank > params.tank_off_above)
    state.burner_on = false;

  PlantFlows flows;
  if (!state.burner_on || params.q_rated <= 0.0) return flows;
  const double heat_capacity = water_mass_kg * constants::water_cp;
  const double q_to_band_top = heat_capacity * (params.tank_off_above - state.t_tank) / dt;
  const double plr = std::clamp(q_to_band_top / params.q_rated, params.min_plr, 1.0);
  flows.q_delivered = plr * params.q_rated;
  flows.fuel_mass = flows.q_delivered * dt / boiler_efficiency(params, plr) / fuel.hhv;
  state.t_tank += flows.q_delivered * dt / heat_capacity;
  return flows;
}

RadiatorEmission radiator_emission(double t_store, double t_air, double t_set,
                                   const RadiatorParams& params, double water_mass_kg,
                                   double dt) {
  if (!(dt > 0.0) || !(water_mass_kg > 0.0))
    throw ArgumentError("radiator needs positive dt and water mass");
  RadiatorEmission out;
  const double opening = std::clamp((t_set - t_air) / params.band, 0.0, 1.0);
  out.m_dot = params.max_flow * opening;
  const double delta_t = t_store - t_air;
  if (out.m_dot <= 0.0 || delta_t <= 0.0) return out;
  const double by_flow = out.m_dot * constants::water_cp * delta_t;
  const double by_surface = params.ua * delta_t;
  // Third limit: the store cannot be pulled below the room air in one step.
  const double by_store = water_mass_kg * constants::water_cp * delta_t / dt;
  out.phi_hc = std::max(std::min({by_flow, by_surface, by_store}), 0.0);
  return out;
}

void radiator_apply(double& t_store, double water_mass_kg, double phi_hc, double dt) {
  t_store -= phi_hc * dt / (water_mass_kg * constants::water_cp);
}

double gas_volume_from_mass(double fuel_mass_kg, const FuelConstants& fuel) {
  if (fuel_mass_kg < 0.0) throw ArgumentError("negative fuel mass");
  return fuel_mass_kg / fuel.density;
}

double gas_volume_from_energy(double fuel_energy_j, const FuelConstants& fuel) {
  if (fuel_energy_j < 0.0) throw ArgumentError("negative fuel energy");
  return fuel_energy_j / fuel.hhv / fuel.density;
}

}  // namespace bps
