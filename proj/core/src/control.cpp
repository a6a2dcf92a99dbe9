#include "bps/control.hpp"

#include <string>

#include "bps/common.hpp"

namespace bps {

ThermostatState thermostat_step(const ThermostatState& state, double t_air) {
  if (!(state.on_below < state.off_above))
    throw ConfigError("thermostat on threshold must lie below the off threshold");
  ThermostatState next = state;
  if (t_air < state.on_below)
    next.heating_on = true;
  else if (t_air > state.off_above)
    next.heating_on = false;
  return next;
}

double setpoint_at(const SetpointSchedule& s, int second_of_day) {
  if (second_of_day < 0 || second_of_day >= 86400)
    throw ArgumentError("time of day outside [0, 86400): " + std::to_string(second_of_day));
  if (!(0 < s.night_end_s && s.night_end_s <= s.day_start_s && s.day_start_s <= s.day_end_s &&
        s.day_end_s <= s.night_start_s && s.night_start_s <= 86400))
    throw ConfigError("setpoint schedule windows must be ordered and non-overlapping");

  const int t = second_of_day;
  if (t < s.night_end_s || t >= s.night_start_s) return s.night_set;
  if (t >= s.day_start_s && t < s.day_end_s) return s.day_set;
  if (t < s.day_start_s) {
    const double f = static_cast<double>(t - s.night_end_s) /
                     static_cast<double>(s.day_start_s - s.night_end_s);
    return s.night_set + f * (s.day_set - s.night_set);
  }
  const double f = static_cast<double>(t - s.day_end_s) /
                   static_cast<double>(s.night_start_s - s.day_end_s);
  return s.day_set + f * (s.night_set - s.day_set);
}

}  // namespace bps
