#pragma once

#include "bps/weather.hpp"

namespace bps {

struct PvArray {
  double area = 84.45;      // m2
  double efficiency = 0.16; // system-level, inverter included
};

// Battery energy bookkeeping. soc and capacity in kWh, power limits in W.
// A zero-capacity battery degenerates to a pass-through (non-storage runs).
struct BatteryState {
  double soc = 5.0;
  double capacity = 10.0;
  double p_char_max = 5000.0;
  double p_disc_max = 5000.0;
  double eta_char = 0.975;
  double eta_disc = 0.975;
};

// Grid exchange: positive fed in, negative drawn.
struct GridExchange {
  double p_feed = 0.0;  // W
};

struct DispatchResult {
  double p_char = 0.0;  // W
  double p_disc = 0.0;  // W
  GridExchange grid;
};

// Irradiance-proportional array output.
double pv_power(const WeatherSample& sample, const PvArray& array);

// Self-consumption rule: surplus charges the battery before feeding in,
// deficit discharges before drawing. Updates soc in place; the returned
// powers satisfy p_pv + p_disc - p_char - p_load = p_feed exactly.
DispatchResult dispatch(double p_pv, double p_load, BatteryState& battery, double dt);

}  // namespace bps
