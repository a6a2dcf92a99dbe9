#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace bps {

// Error taxonomy shared by all modules. Everything derives from Error so
// callers can catch one type at the CLI boundary.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntactically broken input (bad header, unreadable number). Carries the
// offending line number when known.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg, long line = -1)
      : Error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

// Structurally valid input that is missing required content.
class SchemaError : public Error {
public:
  using Error::Error;
};

// Well-formed data that violates a domain invariant (non-uniform timestep,
// probability outside [0,1], ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// Bad run configuration (unknown preset, inconsistent parameters).
class ConfigError : public Error {
public:
  using Error::Error;
};

// Query outside the data horizon (weather lookup past series end, ...).
class RangeError : public Error {
public:
  using Error::Error;
};

// Caller passed a value outside an operation's documented domain.
class ArgumentError : public Error {
public:
  using Error::Error;
};

namespace constants {
inline constexpr double kelvin_offset = 273.15;
inline constexpr double water_cp = 4186.0;        // J/(kg K)
inline constexpr double air_volumetric_cp = 1200.0;  // rho_air * cp_air, J/(m^3 K)
inline constexpr double seconds_per_hour = 3600.0;
inline constexpr double seconds_per_day = 86400.0;
inline constexpr double joules_per_kwh = 3.6e6;
// Air/surface and surface/mass film coefficients of the lumped zone network.
inline constexpr double h_air_surface = 3.45;  // W/(m^2 K)
inline constexpr double h_mass_surface = 9.1;  // W/(m^2 K)
}  // namespace constants

// snprintf-backed number formatting (std::format is not available on every
// supported toolchain). %g with 17 significant digits round-trips a double.
inline std::string format_double(double v, int precision = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

inline std::string format_full(double v) { return format_double(v, 17); }

}  // namespace bps
