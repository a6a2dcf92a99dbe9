#pragma once

namespace bps {

// Two-point plant switch with memory: turns on below on_below, off above
// off_above, holds in between.
struct ThermostatState {
  bool heating_on = true;
  double on_below = 293.15;   // K
  double off_above = 295.15;  // K
};

// Radiator target temperature over the day. Gap periods between the night
// and day windows ramp linearly so the target is continuous.
struct SetpointSchedule {
  double night_set = 293.15;  // K
  double day_set = 295.15;    // K
  int night_end_s = 6 * 3600;    // night runs until 06:00
  int day_start_s = 7 * 3600;    // day plateau from 07:00
  int day_end_s = 22 * 3600;     // ... until 22:00
  int night_start_s = 23 * 3600; // night resumes at 23:00
};

// Applies the hysteresis rule to the previous step's air temperature.
ThermostatState thermostat_step(const ThermostatState& state, double t_air);

// Setpoint for a time of day given in seconds since local midnight.
double setpoint_at(const SetpointSchedule& schedule, int second_of_day);

}  // namespace bps
