#include "bps/electrical.hpp"

#include <algorithm>

#include "bps/common.hpp"

namespace bps {

double pv_power(const WeatherSample& sample, const PvArray& array) {
  if (sample.h_glo_hor < 0.0) throw ArgumentError("negative irradiance");
  return std::max(array.efficiency * array.area * sample.h_glo_hor, 0.0);
}

DispatchResult dispatch(double p_pv, double p_load, BatteryState& battery, double dt) {
  if (p_pv < 0.0 || p_load < 0.0) throw ArgumentError("dispatch powers must be non-negative");
  if (!(dt > 0.0)) throw ArgumentError("dispatch needs a positive step length");
  if (!(battery.eta_char > 0.0 && battery.eta_char <= 1.0) ||
      !(battery.eta_disc > 0.0 && battery.eta_disc <= 1.0))
    throw ConfigError("battery efficiencies must lie in (0, 1]");

  DispatchResult out;
  const double surplus = p_pv - p_load;
  if (surplus > 0.0) {
    const double headroom_w =
        (battery.capacity - battery.soc) * constants::joules_per_kwh / (battery.eta_char * dt);
    out.p_char = std::min({surplus, battery.p_char_max, headroom_w});
    battery.soc += out.p_char * battery.eta_char * dt / constants::joules_per_kwh;
    out.grid.p_feed = surplus - out.p_char;
  } else if (surplus < 0.0) {
    const double available_w = battery.soc * constants::joules_per_kwh * battery.eta_disc / dt;
    out.p_disc = std::min({-surplus, battery.p_disc_max, available_w});
    battery.soc -= out.p_disc * dt / (battery.eta_disc * constants::joules_per_kwh);
    out.grid.p_feed = surplus + out.p_disc;
  } else {
    out.grid.p_feed = 0.0;
  }
  battery.soc = std::clamp(battery.soc, 0.0, battery.capacity);
  return out;
}

}  // namespace bps
