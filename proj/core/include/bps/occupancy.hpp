#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bps {

// Per-slot probability that one household member is at home. Slots divide the
// day evenly (24 hourly slots in the shipped profile); weekday and weekend
// curves have the same slot count.
struct PresenceProfile {
  std::vector<double> weekday_probs;
  std::vector<double> weekend_probs;
  int household_size = 4;
};

struct PresenceSeries {
  std::vector<int> occupant_count;  // one entry per simulation step
  int household_size = 4;
  std::uint64_t seed = 0;
};

// Average electrical appliance power by number of members present; standby
// power applies when nobody is home.
struct ApplianceTable {
  std::array<double, 4> avg_power_by_count{182.65, 331.05, 422.37, 485.16};
  double standby_fraction = 0.15;
};

// Sensible metabolic heat per person.
inline constexpr double metabolic_heat_w = 120.0;

// Loads a profile table (columns slot_index, p_wd_1..p_wd_4, p_we_1..p_we_4)
// and extracts the weekday/weekend curves for the given household size.
PresenceProfile parse_profile_csv(const std::string& content, int household_size);
PresenceProfile load_profile_file(const std::string& path, int household_size);

// Profile with the same probability in every slot (used for the vacation and
// everyone-home patterns).
PresenceProfile constant_profile(double p, int household_size, int slots = 24);

// Draws occupant counts per step: Binomial(household_size, slot probability),
// selecting the weekday or weekend curve per calendar day. Identical inputs
// and seed give an identical series.
PresenceSeries generate_presence(const PresenceProfile& profile,
                                 const std::vector<bool>& day_is_weekend, int steps_per_day,
                                 std::uint64_t seed);

// Pointwise mean across equally long series.
std::vector<double> average_presence(const std::vector<PresenceSeries>& series_set);

// Appliance power for a presence count; count 0 falls back to standby.
double appliance_load(int count, const ApplianceTable& table, int household_size);

// Heat released to the zone: appliances dissipate fully, people add
// metabolic heat.
double internal_heat_gain(int count, double appliance_power);

}  // namespace bps
