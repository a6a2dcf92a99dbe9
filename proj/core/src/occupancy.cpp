#include "bps/occupancy.hpp"

#include <random>

#include "bps/common.hpp"
#include "bps/csv.hpp"

namespace bps {

namespace {

// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw; the
// stream is stable across platforms, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_probability(double p, long line) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("presence probability outside [0,1] (line " + std::to_string(line) +
                          ")");
}

}  // namespace

PresenceProfile parse_profile_csv(const std::string& content, int household_size) {
  if (household_size < 1 || household_size > 4)
    throw ConfigError("household size must be 1..4, got " + std::to_string(household_size));
  const auto rows = csv::lines(content);
  if (rows.empty()) throw ParseError("empty profile file");
  const auto header = csv::split(rows[0]);
  const std::string wd_col = "p_wd_" + std::to_string(household_size);
  const std::string we_col = "p_we_" + std::to_string(household_size);
  std::size_t wd_idx = header.size(), we_idx = header.size(), slot_idx = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == wd_col) wd_idx = i;
    if (header[i] == we_col) we_idx = i;
    if (header[i] == "slot_index") slot_idx = i;
  }
  if (slot_idx == header.size()) throw SchemaError("profile file is missing column 'slot_index'");
  if (wd_idx == header.size()) throw SchemaError("profile file is missing column '" + wd_col + "'");
  if (we_idx == header.size()) throw SchemaError("profile file is missing column '" + we_col + "'");

  PresenceProfile profile;
  profile.household_size = household_size;
  long expected_slot = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    const long line = static_cast<long>(i + 1);
    const auto f = csv::split(rows[i]);
    if (f.size() != header.size())
      throw ParseError("row width does not match header", line);
    if (csv::to_long(f[slot_idx], line) != expected_slot)
      throw ValidationError("slot_index must run 0..n-1 consecutively (line " +
                            std::to_string(line) + ")");
    ++expected_slot;
    const double wd = csv::to_double(f[wd_idx], line);
    const double we = csv::to_double(f[we_idx], line);
    check_probability(wd, line);
    check_probability(we, line);
    profile.weekday_probs.push_back(wd);
    profile.weekend_probs.push_back(we);
  }
  if (profile.weekday_probs.empty()) throw ValidationError("profile file has no slots");
  return profile;
}

PresenceProfile load_profile_file(const std::string& path, int household_size) {
  return parse_profile_csv(csv::read_file(path), household_size);
}

PresenceProfile constant_profile(double p, int household_size, int slots) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("probability outside [0,1]");
  if (slots < 1) throw ArgumentError("profile needs at least one slot");
  PresenceProfile profile;
  profile.household_size = household_size;
  profile.weekday_probs.assign(static_cast<std::size_t>(slots), p);
  profile.weekend_probs = profile.weekday_probs;
  return profile;
}

PresenceSeries generate_presence(const PresenceProfile& profile,
                                 const std::vector<bool>& day_is_weekend, int steps_per_day,
                                 std::uint64_t seed) {
  if (day_is_weekend.empty()) throw ArgumentError("empty day-type calendar");
  const auto slots = profile.weekday_probs.size();
  if (slots == 0 || profile.weekend_probs.size() != slots)
    throw ArgumentError("profile weekday/weekend slot counts differ or are zero");
  if (steps_per_day <= 0 || steps_per_day % static_cast<int>(slots) != 0)
    throw ConfigError("steps_per_day must be a positive multiple of the slot count");
  if (profile.household_size < 1) throw ArgumentError("household size must be positive");

  const int steps_per_slot = steps_per_day / static_cast<int>(slots);
  PresenceSeries series;
  series.household_size = profile.household_size;
  series.seed = seed;
  series.occupant_count.reserve(day_is_weekend.size() * static_cast<std::size_t>(steps_per_day));
  std::mt19937_64 rng{seed};
  for (const bool weekend : day_is_weekend) {
    const auto& probs = weekend ? profile.weekend_probs : profile.weekday_probs;
    for (int step = 0; step < steps_per_day; ++step) {
      const double p = probs[static_cast<std::size_t>(step / steps_per_slot)];
      int count = 0;
      for (int member = 0; member < profile.household_size; ++member)
        if (uniform01(rng) < p) ++count;
      series.occupant_count.push_back(count);
    }
  }
  return series;
}

std::vector<double> average_presence(const std::vector<PresenceSeries>& series_set) {
  if (series_set.empty()) throw ArgumentError("average over an empty series set");
  const auto n = series_set.front().occupant_count.size();
  for (const auto& s : series_set)
    if (s.occupant_count.size() != n)
      throw ArgumentError("presence series have different lengths");
  std::vector<double> mean(n, 0.0);
  for (const auto& s : series_set)
    for (std::size_t i = 0; i < n; ++i) mean[i] += s.occupant_count[i];
  for (auto& v : mean) v /= static_cast<double>(series_set.size());
  return mean;
}

double appliance_load(int count, const ApplianceTable& table, int household_size) {
  if (household_size < 1 || household_size > 4)
    throw ArgumentError("household size must be 1..4");
  if (count < 0 || count > household_size)
    throw ArgumentError("presence count " + std::to_string(count) +
                        " outside 0.." + std::to_string(household_size));
  if (count == 0)
    return table.standby_fraction *
           table.avg_power_by_count[static_cast<std::size_t>(household_size - 1)];
  return table.avg_power_by_count[static_cast<std::size_t>(count - 1)];
}

double internal_heat_gain(int count, double appliance_power) {
  if (count < 0 || appliance_power < 0.0) throw ArgumentError("negative occupancy input");
  return appliance_power + metabolic_heat_w * count;
}

}  // namespace bps
