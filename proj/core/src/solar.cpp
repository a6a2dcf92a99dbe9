#include "bps/solar.hpp"

#include <algorithm>
#include <cmath>

namespace bps::solar {

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double deg = pi / 180.0;
}  // namespace

double declination(int day_of_year) {
  return 23.45 * deg * std::sin(2.0 * pi * (284 + day_of_year) / 365.0);
}

double equation_of_time(int day_of_year) {
  const double b = 2.0 * pi * (day_of_year - 81) / 364.0;
  return 9.87 * std::sin(2.0 * b) - 7.53 * std::cos(b) - 1.5 * std::sin(b);
}

double solar_time_s(int clock_second, int day_of_year, double longitude_deg,
                    double tz_offset_hours) {
  const double meridian_correction_s = 240.0 * (longitude_deg - 15.0 * tz_offset_hours);
  return clock_second + meridian_correction_s + 60.0 * equation_of_time(day_of_year);
}

double hour_angle(double solar_time_s) {
  return (solar_time_s - 43200.0) * pi / 43200.0;
}

double zenith(double latitude, double declination, double hour_angle) {
  const double c = std::sin(latitude) * std::sin(declination) +
                   std::cos(latitude) * std::cos(declination) * std::cos(hour_angle);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double azimuth(double latitude, double declination, double hour_angle) {
  // Angle from south, westward positive, shifted so north = 0, south = pi.
  const double from_south =
      std::atan2(std::sin(hour_angle), std::cos(hour_angle) * std::sin(latitude) -
                                           std::tan(declination) * std::cos(latitude));
  double a = from_south + pi;
  if (a >= 2.0 * pi) a -= 2.0 * pi;
  return a;
}

double plane_irradiance(double h_dir_nor, double h_dif_hor, double sun_zenith,
                        double sun_azimuth, double tilt, double surface_azimuth) {
  const double cos_incidence =
      std::cos(tilt) * std::cos(sun_zenith) +
      std::sin(tilt) * std::sin(sun_zenith) * std::cos(sun_azimuth - surface_azimuth);
  const double beam = h_dir_nor * std::max(cos_incidence, 0.0);
  const double sky = h_dif_hor * 0.5 * (1.0 + std::cos(tilt));
  return std::max(beam + sky, 0.0);
}

}  // namespace bps::solar
