#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bps/clock.hpp"

namespace bps {

// One meteorological record with the derived solar-geometry fields the zone
// and PV models consume. Angles in radians, temperatures in K, irradiances
// in W/m2, rel_hum as a fraction.
struct WeatherSample {
  double t_dry_bulb = 0.0;
  double h_glo_hor = 0.0;
  double h_dir_nor = 0.0;
  double h_dif_hor = 0.0;
  double rel_hum = 0.0;
  double p_atm = 0.0;
  double sol_zen = 0.0;  // solar zenith angle
  double sol_tim = 0.0;  // apparent solar time of day, s
  double lat = 0.0;      // station latitude, rad
  double alt = 0.0;      // station altitude, m
  double clo_tim = 0.0;  // clock time since Jan 1 00:00, s (day_of_year is one-based)
};

struct Location {
  double latitude_deg = 49.1;
  double longitude_deg = 8.44;
  double altitude_m = 110.0;
  double tz_offset_hours = 1.0;
};

// Uniformly spaced record list; immutable after construction and safe to
// share across concurrently running scenarios.
struct WeatherSeries {
  Timestamp start = 0;
  long resolution_s = 0;  // 0 for a single-sample series
  Location location;
  std::vector<WeatherSample> samples;

  Timestamp end() const {
    return start + static_cast<Timestamp>(resolution_s) *
                       static_cast<Timestamp>(samples.size() - 1);
  }
};

enum class WeatherFormat { canonical_csv, epw, tmy3_mos };

// Parses raw file content in the given format into the canonical series.
// Throws ParseError (bad syntax), SchemaError (missing column), or
// ValidationError (non-uniform timestep, out-of-range field).
WeatherSeries parse_weather(const std::string& content, WeatherFormat format);

// Picks the format from the file extension (.csv, .epw, .mos) and parses.
WeatherSeries load_weather_file(const std::string& path);

// Writes the canonical CSV representation (location preamble, header row,
// one row per sample, 17-significant-digit numbers).
std::string serialize_csv(const WeatherSeries& series);

// Returns a copy with every dry-bulb temperature lowered by delta kelvin and
// all other fields bit-identical.
WeatherSeries apply_cold_wave(const WeatherSeries& series, double delta);

// Linear interpolation between neighbouring records; exact at nodes. Throws
// RangeError outside [start, end].
WeatherSample sample_at(const WeatherSeries& series, Timestamp time);

}  // namespace bps
