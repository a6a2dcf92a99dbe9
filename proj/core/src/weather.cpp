#include "bps/weather.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bps/common.hpp"
#include "bps/csv.hpp"
#include "bps/solar.hpp"

namespace bps {

namespace {

constexpr double pi = 3.14159265358979323846;

// Base year for .mos files, whose time axis is seconds from year start.
constexpr int mos_base_year = 2023;

const char* const canonical_header =
    "timestamp_iso8601,t_dry_bulb_K,h_glo_hor,h_dir_nor,h_dif_hor,rel_hum,p_atm,sol_zen_rad";

void fill_derived(WeatherSample& s, Timestamp t, const Location& loc) {
  const int doy = day_of_year(t);
  const int sod = second_of_day(t);
  s.lat = loc.latitude_deg * pi / 180.0;
  s.alt = loc.altitude_m;
  s.clo_tim = static_cast<double>(doy - 1) * constants::seconds_per_day + sod;
  s.sol_tim = solar::solar_time_s(sod, doy, loc.longitude_deg, loc.tz_offset_hours);
}

double computed_zenith(const WeatherSample& s) {
  const int doy = static_cast<int>(s.clo_tim / constants::seconds_per_day) + 1;
  const double decl = solar::declination(doy);
  return solar::zenith(s.lat, decl, solar::hour_angle(s.sol_tim));
}

void validate_sample(const WeatherSample& s, long line) {
  if (!(s.t_dry_bulb > 0.0))
    throw ValidationError("dry-bulb temperature must be positive K (line " +
                          std::to_string(line) + ")");
  if (s.h_glo_hor < 0.0 || s.h_dir_nor < 0.0 || s.h_dif_hor < 0.0)
    throw ValidationError("negative irradiance (line " + std::to_string(line) + ")");
  if (s.rel_hum < 0.0 || s.rel_hum > 1.0)
    throw ValidationError("relative humidity outside [0,1] (line " + std::to_string(line) + ")");
  if (!(s.p_atm > 0.0))
    throw ValidationError("atmospheric pressure must be positive (line " +
                          std::to_string(line) + ")");
}

void finalize_series(WeatherSeries& series, const std::vector<Timestamp>& times) {
  if (times.empty()) throw ValidationError("weather file contains no data rows");
  series.start = times.front();
  series.resolution_s = 0;
  if (times.size() > 1) {
    const Timestamp step = times[1] - times[0];
    if (step <= 0) throw ValidationError("weather timestamps must be strictly increasing");
    for (std::size_t i = 1; i < times.size(); ++i)
      if (times[i] - times[i - 1] != step)
        throw ValidationError("non-uniform weather timestep at row " + std::to_string(i + 1));
    series.resolution_s = static_cast<long>(step);
  }
}

WeatherSeries parse_canonical(const std::string& content) {
  WeatherSeries series;
  const auto rows = csv::lines(content);
  std::size_t i = 0;
  // Optional '#' preamble carrying station metadata as key=value pairs.
  for (; i < rows.size() && !rows[i].empty() && rows[i][0] == '#'; ++i) {
    const auto body = csv::trim(std::string_view{rows[i]}.substr(1));
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) continue;
    const std::string key{csv::trim(body.substr(0, eq))};
    const double value = csv::to_double(body.substr(eq + 1), static_cast<long>(i + 1));
    if (key == "lat_deg")
      series.location.latitude_deg = value;
    else if (key == "lon_deg")
      series.location.longitude_deg = value;
    else if (key == "alt_m")
      series.location.altitude_m = value;
    else if (key == "tz")
      series.location.tz_offset_hours = value;
    else
      throw ParseError("unknown metadata key '" + key + "'", static_cast<long>(i + 1));
  }
  if (i >= rows.size()) throw ParseError("missing weather header row");
  if (csv::trim(rows[i]) != canonical_header) {
    const auto expected = csv::split(canonical_header);
    const auto got = csv::split(rows[i]);
    for (const auto& col : expected)
      if (std::find(got.begin(), got.end(), col) == got.end())
        throw SchemaError("weather file is missing column '" + col + "'");
    throw ParseError("weather columns must appear in canonical order",
                     static_cast<long>(i + 1));
  }
  ++i;

  std::vector<Timestamp> times;
  for (; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    const long line = static_cast<long>(i + 1);
    const auto fields = csv::split(rows[i]);
    if (fields.size() != 8)
      throw ParseError("expected 8 fields, got " + std::to_string(fields.size()), line);
    Timestamp t;
    try {
      t = parse_iso8601(fields[0]);
    } catch (const ParseError& e) {
      throw ParseError(std::string{e.what()}, line);
    }
    WeatherSample s;
    s.t_dry_bulb = csv::to_double(fields[1], line);
    s.h_glo_hor = csv::to_double(fields[2], line);
    s.h_dir_nor = csv::to_double(fields[3], line);
    s.h_dif_hor = csv::to_double(fields[4], line);
    s.rel_hum = csv::to_double(fields[5], line);
    s.p_atm = csv::to_double(fields[6], line);
    s.sol_zen = csv::to_double(fields[7], line);
    fill_derived(s, t, series.location);
    validate_sample(s, line);
    series.samples.push_back(s);
    times.push_back(t);
  }
  finalize_series(series, times);
  return series;
}

// EPW: 8 header lines (LOCATION first, DATA PERIODS last), then hourly rows.
// Fields used: 1 year, 2 month, 3 day, 4 hour 1..24, 7 dry bulb C, 9 rel hum %,
// 10 pressure Pa, 14 GHI, 15 DNI, 16 DHI. Rows are stamped at the start of the
// reported hour; the minute field is ignored. Zenith is computed from geometry.
WeatherSeries parse_epw(const std::string& content) {
  WeatherSeries series;
  const auto rows = csv::lines(content);
  if (rows.empty() || rows[0].rfind("LOCATION", 0) != 0)
    throw ParseError("EPW file must start with a LOCATION line", 1);
  {
    const auto loc = csv::split(rows[0]);
    if (loc.size() < 10) throw ParseError("LOCATION line has too few fields", 1);
    series.location.latitude_deg = csv::to_double(loc[6], 1);
    series.location.longitude_deg = csv::to_double(loc[7], 1);
    series.location.tz_offset_hours = csv::to_double(loc[8], 1);
    series.location.altitude_m = csv::to_double(loc[9], 1);
  }
  std::size_t first_data = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].rfind("DATA PERIODS", 0) == 0) {
      first_data = i + 1;
      break;
    }
  }
  if (first_data == 0) throw ParseError("EPW file has no DATA PERIODS line");

  std::vector<Timestamp> times;
  for (std::size_t i = first_data; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    const long line = static_cast<long>(i + 1);
    const auto f = csv::split(rows[i]);
    if (f.size() < 16) throw SchemaError("EPW data row with fewer than 16 fields (line " +
                                         std::to_string(line) + ")");
    const int year = static_cast<int>(csv::to_long(f[0], line));
    const int month = static_cast<int>(csv::to_long(f[1], line));
    const int day = static_cast<int>(csv::to_long(f[2], line));
    const int hour = static_cast<int>(csv::to_long(f[3], line));
    if (hour < 1 || hour > 24) throw ValidationError("EPW hour outside 1..24 (line " +
                                                     std::to_string(line) + ")");
    const Timestamp t = make_timestamp(year, month, day, hour - 1, 0, 0);
    const double dry_bulb_c = csv::to_double(f[6], line);
    const double rel_hum_pct = csv::to_double(f[8], line);
    const double ghi = csv::to_double(f[13], line);
    const double dni = csv::to_double(f[14], line);
    const double dhi = csv::to_double(f[15], line);
    if (dry_bulb_c >= 99.0 || ghi >= 9999.0 || dni >= 9999.0 || dhi >= 9999.0)
      throw ValidationError("EPW missing-value sentinel (line " + std::to_string(line) + ")");
    WeatherSample s;
    s.t_dry_bulb = dry_bulb_c + constants::kelvin_offset;
    s.rel_hum = rel_hum_pct / 100.0;
    s.p_atm = csv::to_double(f[9], line);
    s.h_glo_hor = ghi;
    s.h_dir_nor = dni;
    s.h_dif_hor = dhi;
    fill_derived(s, t, series.location);
    s.sol_zen = computed_zenith(s);
    if (s.sol_zen >= pi / 2.0) s.h_dir_nor = 0.0;
    validate_sample(s, line);
    series.samples.push_back(s);
    times.push_back(t);
  }
  finalize_series(series, times);
  return series;
}

// .mos table: '#' comment lines (one of them "#LOCATION,lat,lon,tz,alt"), a
// "double tabN(rows,cols)" declaration, then whitespace-separated rows whose
// time axis is seconds from the start of the base year. Columns follow the
// TMY3 layout: 1 time, 2 dry bulb C, 4 rel hum %, 5 pressure Pa, 8 GHI,
// 9 DNI, 10 DHI.
WeatherSeries parse_mos(const std::string& content) {
  WeatherSeries series;
  bool have_location = false;
  bool have_table = false;
  const Timestamp year_start = make_timestamp(mos_base_year, 1, 1, 0, 0, 0);

  std::vector<Timestamp> times;
  const auto rows = csv::lines(content);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const long line = static_cast<long>(i + 1);
    const auto row = csv::trim(rows[i]);
    if (row.empty()) continue;
    if (row[0] == '#') {
      if (row.rfind("#LOCATION", 0) == 0) {
        const auto f = csv::split(row);
        if (f.size() < 5) throw ParseError("#LOCATION needs lat,lon,tz,alt", line);
        series.location.latitude_deg = csv::to_double(f[1], line);
        series.location.longitude_deg = csv::to_double(f[2], line);
        series.location.tz_offset_hours = csv::to_double(f[3], line);
        series.location.altitude_m = csv::to_double(f[4], line);
        have_location = true;
      }
      continue;
    }
    if (row.rfind("double", 0) == 0) {
      have_table = true;
      continue;
    }
    if (!have_table) throw ParseError("data before table declaration", line);
    std::istringstream fields{std::string{row}};
    std::vector<double> v;
    double x;
    while (fields >> x) v.push_back(x);
    if (!fields.eof()) throw ParseError("non-numeric value in data row", line);
    if (v.size() < 10)
      throw SchemaError("mos data row needs at least 10 columns (line " +
                        std::to_string(line) + ")");
    const double time_s = v[0];
    if (time_s != std::floor(time_s))
      throw ValidationError("fractional second in time column (line " + std::to_string(line) + ")");
    const Timestamp t = year_start + static_cast<Timestamp>(time_s);
    WeatherSample s;
    s.t_dry_bulb = v[1] + constants::kelvin_offset;
    s.rel_hum = v[3] / 100.0;
    s.p_atm = v[4];
    s.h_glo_hor = v[7];
    s.h_dir_nor = v[8];
    s.h_dif_hor = v[9];
    fill_derived(s, t, series.location);
    s.sol_zen = computed_zenith(s);
    if (s.sol_zen >= pi / 2.0) s.h_dir_nor = 0.0;
    validate_sample(s, line);
    series.samples.push_back(s);
    times.push_back(t);
  }
  if (!have_table) throw ParseError("missing table declaration ('double tab...')");
  if (!have_location) throw SchemaError("mos file is missing the #LOCATION line");
  finalize_series(series, times);
  return series;
}

double lerp(double a, double b, double f) { return a + (b - a) * f; }

}  // namespace

WeatherSeries parse_weather(const std::string& content, WeatherFormat format) {
  switch (format) {
    case WeatherFormat::canonical_csv: return parse_canonical(content);
    case WeatherFormat::epw: return parse_epw(content);
    case WeatherFormat::tmy3_mos: return parse_mos(content);
  }
  throw Error("unknown weather format");
}

WeatherSeries load_weather_file(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  WeatherFormat format;
  if (ext == ".csv")
    format = WeatherFormat::canonical_csv;
  else if (ext == ".epw")
    format = WeatherFormat::epw;
  else if (ext == ".mos")
    format = WeatherFormat::tmy3_mos;
  else
    throw ConfigError("unrecognized weather file extension: " + path);
  return parse_weather(csv::read_file(path), format);
}

std::string serialize_csv(const WeatherSeries& series) {
  std::string out;
  out += "# lat_deg=" + format_full(series.location.latitude_deg) + "\n";
  out += "# lon_deg=" + format_full(series.location.longitude_deg) + "\n";
  out += "# alt_m=" + format_full(series.location.altitude_m) + "\n";
  out += "# tz=" + format_full(series.location.tz_offset_hours) + "\n";
  out += canonical_header;
  out += '\n';
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    const auto& s = series.samples[i];
    const Timestamp t =
        series.start + static_cast<Timestamp>(series.resolution_s) * static_cast<Timestamp>(i);
    out += format_iso8601(t);
    out += ',' + format_full(s.t_dry_bulb);
    out += ',' + format_full(s.h_glo_hor);
    out += ',' + format_full(s.h_dir_nor);
    out += ',' + format_full(s.h_dif_hor);
    out += ',' + format_full(s.rel_hum);
    out += ',' + format_full(s.p_atm);
    out += ',' + format_full(s.sol_zen);
    out += '\n';
  }
  return out;
}

WeatherSeries apply_cold_wave(const WeatherSeries& series, double delta) {
  if (!std::isfinite(delta)) throw ValidationError("cold-wave delta must be finite");
  WeatherSeries out = series;
  for (auto& s : out.samples) s.t_dry_bulb -= delta;
  return out;
}

WeatherSample sample_at(const WeatherSeries& series, Timestamp time) {
  if (series.samples.empty()) throw RangeError("empty weather series");
  if (time < series.start || time > series.end())
    throw RangeError("time " + format_iso8601(time) + " outside weather horizon [" +
                     format_iso8601(series.start) + ", " + format_iso8601(series.end()) + "]");
  if (series.resolution_s == 0) return series.samples.front();
  const Timestamp offset = time - series.start;
  const auto idx = static_cast<std::size_t>(offset / series.resolution_s);
  const Timestamp rem = offset % series.resolution_s;
  if (rem == 0) return series.samples[idx];
  const double f = static_cast<double>(rem) / static_cast<double>(series.resolution_s);
  const auto& a = series.samples[idx];
  const auto& b = series.samples[idx + 1];
  WeatherSample s;
  s.t_dry_bulb = lerp(a.t_dry_bulb, b.t_dry_bulb, f);
  s.h_glo_hor = lerp(a.h_glo_hor, b.h_glo_hor, f);
  s.h_dir_nor = lerp(a.h_dir_nor, b.h_dir_nor, f);
  s.h_dif_hor = lerp(a.h_dif_hor, b.h_dif_hor, f);
  s.rel_hum = lerp(a.rel_hum, b.rel_hum, f);
  s.p_atm = lerp(a.p_atm, b.p_atm, f);
  s.sol_zen = lerp(a.sol_zen, b.sol_zen, f);
  s.sol_tim = lerp(a.sol_tim, b.sol_tim, f);
  s.lat = a.lat;
  s.alt = a.alt;
  s.clo_tim = lerp(a.clo_tim, b.clo_tim, f);
  return s;
}

}  // namespace bps
