#pragma once

namespace bps::solar {

// All angles in radians unless the name says otherwise.

// Declination of the sun for a one-based day of year.
double declination(int day_of_year);

// Equation of time in minutes (apparent minus mean solar time).
double equation_of_time(int day_of_year);

// Apparent solar time in seconds since local solar midnight. clock_second is
// seconds since local standard midnight, longitude in degrees east,
// tz_offset_hours the standard-meridian offset (e.g. 1 for CET).
double solar_time_s(int clock_second, int day_of_year, double longitude_deg,
                    double tz_offset_hours);

// Hour angle from apparent solar time (0 at solar noon, afternoon positive).
double hour_angle(double solar_time_s);

// Solar zenith angle.
double zenith(double latitude, double declination, double hour_angle);

// Solar azimuth measured clockwise from north (south = pi).
double azimuth(double latitude, double declination, double hour_angle);

// Irradiance on a tilted plane from direct-normal and diffuse-horizontal
// components (isotropic sky, no ground reflection). tilt 0 is horizontal,
// pi/2 vertical; surface_azimuth uses the same north-clockwise convention.
double plane_irradiance(double h_dir_nor, double h_dif_hor, double sun_zenith,
                        double sun_azimuth, double tilt, double surface_azimuth);

}  // namespace bps::solar
