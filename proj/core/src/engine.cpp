#include "bps/engine.hpp"

#include <cmath>

#include "bps/common.hpp"

namespace bps {

namespace {

void validate_input(const SimulationInput& in) {
  if (in.weather == nullptr) throw ValidationError("simulation needs a weather series");
  if (in.dt_s <= 0) throw ValidationError("step length must be positive");
  if (in.steps <= 0) throw ValidationError("simulation needs at least one step");
  if (86400 % in.dt_s != 0)
    throw ValidationError("step length must divide the day evenly");
  const Timestamp last = in.start + static_cast<Timestamp>(in.steps - 1) * in.dt_s;
  if (in.start < in.weather->start || last > in.weather->end())
    throw RangeError("weather horizon [" + format_iso8601(in.weather->start) + ", " +
                     format_iso8601(in.weather->end()) + "] does not cover the simulation");
  switch (in.plant.type) {
    case PlantType::gas_boiler:
      if (in.plant.heat_pump.q_rated != 0.0)
        throw ValidationError("heat-pump parameters set in a gas-boiler configuration");
      break;
    case PlantType::heat_pump:
      if (in.plant.boiler.q_rated != 0.0)
        throw ValidationError("boiler parameters set in a heat-pump configuration");
      break;
  }
  if (in.plant.radiator.band <= 0.0) throw ValidationError("radiator band must be positive");
  if (in.plant.radiator.ua < 0.0 || in.plant.radiator.max_flow < 0.0)
    throw ValidationError("radiator parameters must be non-negative");
  if (in.plant.loop_mass_kg <= 0.0) throw ValidationError("loop water mass must be positive");
  const auto& b = in.electrical.battery;
  if (b.capacity < 0.0 || b.soc < 0.0 || b.soc > b.capacity)
    throw ValidationError("battery state of charge outside [0, capacity]");
}

std::vector<bool> weekend_calendar(Timestamp start, long days) {
  std::vector<bool> cal;
  cal.reserve(static_cast<std::size_t>(days));
  for (long d = 0; d < days; ++d)
    cal.push_back(is_weekend(start + d * 86400));
  return cal;
}

}  // namespace

SimulationTrace simulate(const SimulationInput& in) {
  validate_input(in);
  const FiveR1CNetwork net = build_network(in.fabric);

  const int steps_per_day = static_cast<int>(86400 / in.dt_s);
  const long days = (in.steps + steps_per_day - 1) / steps_per_day;
  const PresenceSeries presence = generate_presence(
      in.presence, weekend_calendar(in.start, days), steps_per_day, in.presence_seed);

  const bool is_boiler = in.plant.type == PlantType::gas_boiler;
  const double water_mass = is_boiler
                                ? in.plant.boiler.tank_volume * 1000.0 + in.plant.loop_mass_kg
                                : in.plant.loop_mass_kg;

  ZoneState zone;
  HydronicState hyd;
  if (is_boiler) hyd.t_loop = hyd.t_tank;
  ThermostatState thermostat = in.control.thermostat;
  BatteryState battery = in.electrical.battery;

  SimulationTrace trace;
  trace.start = in.start;
  trace.dt_s = in.dt_s;
  trace.records.reserve(static_cast<std::size_t>(in.steps));
  const double dt = static_cast<double>(in.dt_s);

  for (long k = 0; k < in.steps; ++k) {
    try {
      const Timestamp now = in.start + k * in.dt_s;
      const WeatherSample w = sample_at(*in.weather, now);
      const double t_ext = w.t_dry_bulb;
      const double t_sup = t_ext;  // natural ventilation, no heat recovery

      const int occupants = presence.occupant_count[static_cast<std::size_t>(k)];
      const double p_appliance =
          appliance_load(occupants, in.appliances, presence.household_size);
      const double phi_int = internal_heat_gain(occupants, p_appliance);
      const double phi_sol = solar_gains(w, in.fabric);

      const double t_set = setpoint_at(in.control.schedule, second_of_day(now));
      thermostat = thermostat_step(thermostat, zone.t_air);

      PlantFlows flows;
      if (is_boiler) {
        flows = boiler_step(in.plant.boiler, hyd, in.plant.fuel, water_mass, dt);
        hyd.t_loop = hyd.t_tank;
      } else {
        flows = heat_pump_step(in.plant.heat_pump, hyd, thermostat.heating_on,
                               water_mass, dt);
      }

      // The air node has no heat capacity, so a lagged valve would chatter.
      // Solve valve and air balance together: emitter output falls as the
      // air warms while the end-of-step air temperature rises with injected
      // heat, giving a unique fixed point found by bisection.
      const auto air_at = [&](double phi) {
        return step_zone(net, zone, t_ext, t_sup, phi_int, phi_sol, phi, dt).t_air;
      };
      const auto offered = [&](double t_air) {
        return radiator_emission(hyd.t_loop, t_air, t_set, in.plant.radiator, water_mass, dt)
            .phi_hc;
      };
      double phi_hc = 0.0;
      const double at_closed = offered(air_at(0.0));
      if (at_closed > 0.0) {
        double lo = 0.0, hi = at_closed;
        for (int i = 0; i < 64; ++i) {
          const double mid = 0.5 * (lo + hi);
          if (offered(air_at(mid)) >= mid)
            lo = mid;
          else
            hi = mid;
        }
        phi_hc = lo;
      }

      zone = step_zone(net, zone, t_ext, t_sup, phi_int, phi_sol, phi_hc, dt);
      hyd.m_dot =
          radiator_emission(hyd.t_loop, zone.t_air, t_set, in.plant.radiator, water_mass, dt)
              .m_dot;
      if (is_boiler) {
        radiator_apply(hyd.t_tank, water_mass, phi_hc, dt);
        hyd.t_loop = hyd.t_tank;
      } else {
        radiator_apply(hyd.t_loop, water_mass, phi_hc, dt);
      }

      const double p_pv = in.electrical.has_pv ? pv_power(w, in.electrical.pv) : 0.0;
      const double p_load = p_appliance + flows.p_electric;
      const DispatchResult d = dispatch(p_pv, p_load, battery, dt);

      TraceRecord rec;
      rec.timestamp = now;
      rec.t_air = zone.t_air;
      rec.t_sur = zone.t_sur;
      rec.t_mas = zone.t_mas;
      rec.t_ext = t_ext;
      rec.heating_on = thermostat.heating_on;
      rec.phi_hc = phi_hc;
      rec.p_electric_plant = flows.p_electric;
      rec.fuel_mass = flows.fuel_mass;
      rec.p_appliance = p_appliance;
      rec.occupants = occupants;
      rec.p_pv = p_pv;
      rec.p_char = d.p_char;
      rec.p_disc = d.p_disc;
      rec.p_feed = d.grid.p_feed;
      rec.soc = battery.soc;
      trace.records.push_back(rec);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(k) + ": " + e.what());
    }
  }
  return trace;
}

std::string trace_to_csv(const SimulationTrace& trace) {
  std::string out =
      "timestamp,t_air,t_sur,t_mas,t_ext,heating_on,phi_hc,p_electric_plant,fuel_mass,"
      "p_appliance,occupants,p_pv,p_char,p_disc,p_feed,soc\n";
  for (const auto& r : trace.records) {
    out += format_iso8601(r.timestamp);
    out += ',' + format_double(r.t_air);
    out += ',' + format_double(r.t_sur);
    out += ',' + format_double(r.t_mas);
    out += ',' + format_double(r.t_ext);
    out += r.heating_on ? ",1" : ",0";
    out += ',' + format_double(r.phi_hc);
    out += ',' + format_double(r.p_electric_plant);
    out += ',' + format_double(r.fuel_mass);
    out += ',' + format_double(r.p_appliance);
    out += ',' + std::to_string(r.occupants);
    out += ',' + format_double(r.p_pv);
    out += ',' + format_double(r.p_char);
    out += ',' + format_double(r.p_disc);
    out += ',' + format_double(r.p_feed);
    out += ',' + format_double(r.soc);
    out += '\n';
  }
  return out;
}

}  // namespace bps
