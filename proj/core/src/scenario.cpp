#include "bps/scenario.hpp"

#include <algorithm>

#include "bps/common.hpp"

namespace bps {

namespace {

// splitmix64 step; decorrelates the per-pattern seeds from the master seed.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::string ScenarioSpec::code() const {
  return "B" + std::to_string(building) + "O" + std::to_string(occupancy) + "W" +
         std::to_string(weather);
}

std::uint64_t presence_seed_for(std::uint64_t master_seed, int occupancy_variant) {
  return mix(master_seed + static_cast<std::uint64_t>(occupancy_variant));
}

std::vector<ScenarioSpec> build_matrix(std::uint64_t master_seed) {
  std::vector<ScenarioSpec> matrix;
  matrix.reserve(36);
  for (int b = 1; b <= 6; ++b)
    for (int o = 1; o <= 3; ++o)
      for (int w = 1; w <= 2; ++w)
        matrix.push_back(ScenarioSpec{b, o, w, presence_seed_for(master_seed, o)});
  return matrix;
}

ScenarioSpec parse_code(const std::string& code, std::uint64_t master_seed) {
  const auto bad = [&] {
    return ConfigError("scenario code must look like B1O1W1, got '" + code + "'");
  };
  if (code.size() != 6 || code[0] != 'B' || code[2] != 'O' || code[4] != 'W') throw bad();
  const int b = code[1] - '0';
  const int o = code[3] - '0';
  const int w = code[5] - '0';
  if (b < 1 || b > 6 || o < 1 || o > 3 || w < 1 || w > 2) throw bad();
  return ScenarioSpec{b, o, w, presence_seed_for(master_seed, o)};
}

CostBreakdown account_from_totals(double v_gas_m3, double e_feed_kwh, const Tariffs& tariffs,
                                  double exported_kwh) {
  const double fuel_mass = v_gas_m3 * tariffs.fuel.density;
  const double gas_kwh = fuel_mass * tariffs.fuel.hhv / constants::joules_per_kwh;
  const double net_drawn_kwh = std::max(0.0, -e_feed_kwh);
  CostBreakdown out;
  out.co2_t = (fuel_mass * tariffs.fuel.co2_per_kg + net_drawn_kwh * tariffs.elec_co2) / 1000.0;
  out.cost_eur = gas_kwh * tariffs.gas_price + net_drawn_kwh * tariffs.elec_price -
                 exported_kwh * tariffs.feed_in_tariff;
  return out;
}

ScenarioResult account(const SimulationTrace& trace, const Tariffs& tariffs,
                       const std::string& code) {
  ScenarioResult r;
  r.code = code;
  const double dt = static_cast<double>(trace.dt_s);
  double fuel_mass = 0.0, appliance_j = 0.0, pv_j = 0.0, feed_j = 0.0, exported_j = 0.0;
  for (const auto& rec : trace.records) {
    fuel_mass += rec.fuel_mass;
    appliance_j += rec.p_appliance * dt;
    pv_j += rec.p_pv * dt;
    feed_j += rec.p_feed * dt;
    if (rec.p_feed > 0.0) exported_j += rec.p_feed * dt;
  }
  r.v_gas_m3 = fuel_mass / tariffs.fuel.density;
  r.e_load_kwh = -appliance_j / constants::joules_per_kwh;
  r.e_gen_kwh = pv_j / constants::joules_per_kwh;
  r.e_feed_kwh = feed_j / constants::joules_per_kwh;
  const CostBreakdown cb = account_from_totals(r.v_gas_m3, r.e_feed_kwh, tariffs,
                                               exported_j / constants::joules_per_kwh);
  r.co2_t = cb.co2_t;
  r.cost_eur = cb.cost_eur;
  return r;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace bps
