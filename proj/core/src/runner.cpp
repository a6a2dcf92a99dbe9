#include "bps/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "bps/common.hpp"
#include "bps/csv.hpp"

namespace bps {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string resolve_path(const fs::path& base_dir, const std::string& p) {
  fs::path path{p};
  if (path.is_absolute()) return path.lexically_normal().string();
  return (base_dir / path).lexically_normal().string();
}

const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double num_or(const json& j, const char* key, double fallback) {
  if (const json* v = find(j, key)) {
    if (!v->is_number()) throw ConfigError(std::string{"config key '"} + key + "' must be a number");
    return v->get<double>();
  }
  return fallback;
}

long int_or(const json& j, const char* key, long fallback) {
  if (const json* v = find(j, key)) {
    if (!v->is_number_integer())
      throw ConfigError(std::string{"config key '"} + key + "' must be an integer");
    return v->get<long>();
  }
  return fallback;
}

bool bool_or(const json& j, const char* key, bool fallback) {
  if (const json* v = find(j, key)) {
    if (!v->is_boolean()) throw ConfigError(std::string{"config key '"} + key + "' must be a boolean");
    return v->get<bool>();
  }
  return fallback;
}

std::string str_or(const json& j, const char* key, const std::string& fallback) {
  if (const json* v = find(j, key)) {
    if (!v->is_string()) throw ConfigError(std::string{"config key '"} + key + "' must be a string");
    return v->get<std::string>();
  }
  return fallback;
}

std::string required_str(const json& j, const char* key, const char* section) {
  if (const json* v = find(j, key)) {
    if (!v->is_string()) throw ConfigError(std::string{"config key '"} + key + "' must be a string");
    return v->get<std::string>();
  }
  throw ConfigError(std::string{"config section '"} + section + "' is missing key '" + key + "'");
}

// "HH:MM" to seconds since midnight.
int parse_time_of_day(const std::string& text) {
  int h = 0, m = 0;
  if (std::sscanf(text.c_str(), "%d:%d", &h, &m) != 2 || h < 0 || h > 24 || m < 0 || m > 59)
    throw ConfigError("time of day must look like 'HH:MM', got '" + text + "'");
  return h * 3600 + m * 60;
}

json parse_json_file(const std::string& path) {
  const std::string content = csv::read_file(path);
  try {
    return json::parse(content);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace

BuildingFabric load_fabric_file(const std::string& path) {
  const json j = parse_json_file(path);
  try {
    BuildingFabric f;
    f.a_f = j.at("a_f_m2").get<double>();
    f.footprint = num_or(j, "footprint_m2", f.a_f);
    f.u_op = j.at("u_op_w_per_m2k").get<double>();
    f.a_op = j.at("a_op_m2").get<double>();
    f.f_ms = num_or(j, "f_ms", 3.0);
    f.rat_sur = num_or(j, "rat_sur", 4.5);
    f.c_m_spec = num_or(j, "c_m_spec_j_per_m2k", 165000.0);
    f.ach = num_or(j, "ach_per_h", 0.5);
    f.volume = j.at("volume_m3").get<double>();
    for (const auto& w : j.at("windows")) {
      WindowSpec spec;
      spec.area = w.at("area_m2").get<double>();
      spec.u = w.at("u_w_per_m2k").get<double>();
      spec.g = w.at("g").get<double>();
      spec.azimuth_deg = num_or(w, "azimuth_deg", 180.0);
      spec.tilt_deg = num_or(w, "tilt_deg", 90.0);
      f.windows.push_back(spec);
    }
    return f;
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

RunConfig load_run_config(const std::string& path) {
  const json j = parse_json_file(path);
  const fs::path base = fs::path{path}.parent_path();
  RunConfig c;
  try {
    c.seed = static_cast<std::uint64_t>(int_or(j, "seed", 1));
    c.dt_s = int_or(j, "dt_s", 900);
    c.start = parse_iso8601(str_or(j, "start", "2023-01-01T00:00:00"));
    c.days = int_or(j, "days", 31);
    c.warmup_hours = int_or(j, "warmup_hours", 24);
    c.out_dir = resolve_path(base, str_or(j, "out_dir", "out"));
    c.jobs = static_cast<int>(int_or(j, "jobs", 1));
    c.filter = str_or(j, "filter", "*");
    c.write_traces = bool_or(j, "write_traces", true);

    const json* weather = find(j, "weather");
    if (weather == nullptr) throw ConfigError("config is missing the 'weather' section");
    c.weather_file = resolve_path(base, required_str(*weather, "file", "weather"));
    c.cold_wave_delta_k = num_or(*weather, "cold_wave_delta_k", 4.0);

    const json* occ = find(j, "occupancy");
    if (occ == nullptr) throw ConfigError("config is missing the 'occupancy' section");
    c.profile_file = resolve_path(base, required_str(*occ, "profile_file", "occupancy"));
    c.household_size = static_cast<int>(int_or(*occ, "household_size", 4));
    if (const json* powers = find(*occ, "appliance_w_by_count")) {
      if (!powers->is_array() || powers->size() != 4)
        throw ConfigError("appliance_w_by_count must be an array of 4 powers");
      for (std::size_t i = 0; i < 4; ++i)
        c.appliances.avg_power_by_count[i] = powers->at(i).get<double>();
    }
    c.appliances.standby_fraction = num_or(*occ, "standby_fraction", 0.15);

    const json* fabric = find(j, "fabric");
    if (fabric == nullptr) throw ConfigError("config is missing the 'fabric' section");
    c.fabric_worse_file = resolve_path(base, required_str(*fabric, "worse", "fabric"));
    c.fabric_better_file = resolve_path(base, required_str(*fabric, "better", "fabric"));

    if (const json* plant = find(j, "plant")) {
      c.design_t_ext = num_or(*plant, "design_t_ext_k", 263.15);
      c.sizing_margin = num_or(*plant, "sizing_margin", 1.2);
      c.loop_mass_kg = num_or(*plant, "loop_mass_kg", 150.0);
      if (const json* hp = find(*plant, "heat_pump")) {
        c.heat_pump.q_rated = num_or(*hp, "q_rated_w", 0.0);
        c.heat_pump.eta_carnot = num_or(*hp, "eta_carnot", 0.45);
        c.heat_pump.t_source = num_or(*hp, "t_source_k", 283.15);
        c.heat_pump.t_supply_set = num_or(*hp, "t_supply_set_k", 318.15);
      }
      if (const json* bo = find(*plant, "boiler")) {
        c.boiler.q_rated = num_or(*bo, "q_rated_w", 0.0);
        c.boiler.tank_volume = num_or(*bo, "tank_volume_m3", 0.3);
        c.boiler.tank_on_below = num_or(*bo, "tank_on_below_k", 328.15);
        c.boiler.tank_off_above = num_or(*bo, "tank_off_above_k", 338.15);
        c.boiler.min_plr = num_or(*bo, "min_plr", 0.2);
        if (const json* curve = find(*bo, "efficiency_curve")) {
          c.boiler.efficiency_curve.clear();
          for (const auto& pt : *curve) {
            if (!pt.is_array() || pt.size() != 2)
              throw ConfigError("efficiency_curve entries must be [plr, eta] pairs");
            c.boiler.efficiency_curve.push_back(
                EfficiencyPoint{pt.at(0).get<double>(), pt.at(1).get<double>()});
          }
        }
      }
      if (const json* rad = find(*plant, "radiator")) {
        c.radiator_band_k = num_or(*rad, "band_k", 2.0);
        c.radiator_ua_fraction_heat_pump = num_or(*rad, "ua_fraction_heat_pump", 0.125);
        c.radiator_ua_fraction_boiler = num_or(*rad, "ua_fraction_boiler", 0.1);
      }
    }

    if (const json* elec = find(j, "electrical")) {
      if (const json* pv = find(*elec, "pv")) {
        c.pv.area = num_or(*pv, "area_m2", 84.45);
        c.pv.efficiency = num_or(*pv, "efficiency", 0.16);
      }
      if (const json* bat = find(*elec, "battery")) {
        c.battery_template.capacity = num_or(*bat, "capacity_kwh", 10.0);
        c.battery_template.p_char_max = num_or(*bat, "p_char_max_w", 5000.0);
        c.battery_template.p_disc_max = num_or(*bat, "p_disc_max_w", 5000.0);
        c.battery_template.eta_char = num_or(*bat, "eta_char", 0.975);
        c.battery_template.eta_disc = num_or(*bat, "eta_disc", 0.975);
        c.battery_initial_soc_fraction = num_or(*bat, "initial_soc_fraction", 0.5);
      }
    }

    if (const json* ctl = find(j, "control")) {
      c.control.thermostat.on_below = num_or(*ctl, "on_below_k", 293.15);
      c.control.thermostat.off_above = num_or(*ctl, "off_above_k", 295.15);
      c.control.schedule.night_set = num_or(*ctl, "night_set_k", 293.15);
      c.control.schedule.day_set = num_or(*ctl, "day_set_k", 295.15);
      c.control.schedule.night_end_s = parse_time_of_day(str_or(*ctl, "night_end", "06:00"));
      c.control.schedule.day_start_s = parse_time_of_day(str_or(*ctl, "day_start", "07:00"));
      c.control.schedule.day_end_s = parse_time_of_day(str_or(*ctl, "day_end", "22:00"));
      c.control.schedule.night_start_s = parse_time_of_day(str_or(*ctl, "night_start", "23:00"));
    }

    if (const json* tar = find(j, "tariffs")) {
      c.tariffs.elec_price = num_or(*tar, "elec_eur_per_kwh", 0.3986);
      c.tariffs.gas_price = num_or(*tar, "gas_eur_per_kwh", 0.02907);
      c.tariffs.feed_in_tariff = num_or(*tar, "feed_in_eur_per_kwh", 0.0);
      c.tariffs.elec_co2 = num_or(*tar, "elec_co2_kg_per_kwh", 0.380);
      if (const json* fuel = find(*tar, "fuel")) {
        c.tariffs.fuel.hhv = num_or(*fuel, "hhv_mj_per_kg", 55.5) * 1e6;
        c.tariffs.fuel.co2_per_kg = num_or(*fuel, "co2_kg_per_kg", 2.23);
        c.tariffs.fuel.density = num_or(*fuel, "density_kg_per_m3", 0.84);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return c;
}

double design_heat_load(const FiveR1CNetwork& net, double t_ext, double t_air_target) {
  const double free_floating = steady_state(net, t_ext, t_ext, 0.0, 0.0, 0.0).t_air;
  const double probe = 1000.0;
  const double gain = (steady_state(net, t_ext, t_ext, 0.0, 0.0, probe).t_air - free_floating) / probe;
  if (!(gain > 0.0)) throw ConfigError("zone does not respond to heating power");
  return std::max(0.0, (t_air_target - free_floating) / gain);
}

namespace {

PlantConfig size_plant(const RunConfig& c, const BuildingFabric& fabric, PlantType type) {
  PlantConfig plant;
  plant.type = type;
  plant.loop_mass_kg = c.loop_mass_kg;
  plant.fuel = c.tariffs.fuel;
  plant.radiator.band = c.radiator_band_k;

  const FiveR1CNetwork net = build_network(fabric);
  const double load = design_heat_load(net, c.design_t_ext, c.control.schedule.day_set);
  const double q_rated = c.sizing_margin * load;

  if (type == PlantType::heat_pump) {
    plant.heat_pump = c.heat_pump;
    if (plant.heat_pump.q_rated <= 0.0) plant.heat_pump.q_rated = q_rated;
    plant.radiator.ua = c.radiator_ua_fraction_heat_pump * plant.heat_pump.q_rated;
  } else {
    plant.boiler = c.boiler;
    if (plant.boiler.q_rated <= 0.0) plant.boiler.q_rated = q_rated;
    plant.radiator.ua = c.radiator_ua_fraction_boiler * plant.boiler.q_rated;
  }
  plant.radiator.max_flow = 2.0 * plant.radiator.ua / constants::water_cp;
  return plant;
}

}  // namespace

RunAssets load_assets(const RunConfig& c) {
  RunAssets a;
  a.weather_normal = load_weather_file(c.weather_file);
  a.weather_cold = apply_cold_wave(a.weather_normal, c.cold_wave_delta_k);
  a.presence_normal = load_profile_file(c.profile_file, c.household_size);
  const int slots = static_cast<int>(a.presence_normal.weekday_probs.size());
  a.presence_vacation = constant_profile(0.0, c.household_size, slots);
  a.presence_everyone_home = constant_profile(1.0, c.household_size, slots);
  a.fabric_worse = load_fabric_file(c.fabric_worse_file);
  a.fabric_better = load_fabric_file(c.fabric_better_file);
  a.boiler_worse = size_plant(c, a.fabric_worse, PlantType::gas_boiler);
  a.boiler_better = size_plant(c, a.fabric_better, PlantType::gas_boiler);
  a.heat_pump_worse = size_plant(c, a.fabric_worse, PlantType::heat_pump);
  a.heat_pump_better = size_plant(c, a.fabric_better, PlantType::heat_pump);
  return a;
}

SimulationInput assemble(const RunConfig& c, const RunAssets& a, const ScenarioSpec& spec) {
  SimulationInput in;
  in.weather = spec.weather == 1 ? &a.weather_normal : &a.weather_cold;
  in.fabric = spec.better_fabric() ? a.fabric_better : a.fabric_worse;
  if (spec.uses_boiler())
    in.plant = spec.better_fabric() ? a.boiler_better : a.boiler_worse;
  else
    in.plant = spec.better_fabric() ? a.heat_pump_better : a.heat_pump_worse;

  in.electrical.has_pv = spec.has_pv();
  if (spec.has_pv()) {
    in.electrical.pv = c.pv;
    in.electrical.battery = c.battery_template;
    in.electrical.battery.soc = c.battery_initial_soc_fraction * c.battery_template.capacity;
  } else {
    in.electrical.battery = BatteryState{};
    in.electrical.battery.capacity = 0.0;
    in.electrical.battery.soc = 0.0;
  }

  in.control = c.control;
  switch (spec.occupancy) {
    case 1: in.presence = a.presence_normal; break;
    case 2: in.presence = a.presence_vacation; break;
    default: in.presence = a.presence_everyone_home; break;
  }
  in.appliances = c.appliances;
  in.start = c.start;
  in.dt_s = c.dt_s;
  in.steps = c.days * (86400 / c.dt_s);
  in.presence_seed = spec.presence_seed;
  return in;
}

std::string ValidationReport::rendered() const {
  std::string out;
  for (const auto& m : messages) out += m + "\n";
  out += ok ? "configuration valid\n" : "configuration INVALID\n";
  return out;
}

ValidationReport validate_run(const RunConfig& c) {
  ValidationReport report;
  const auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.messages.push_back("error: " + msg);
  };
  const auto info = [&](const std::string& msg) { report.messages.push_back(msg); };

  if (c.dt_s <= 0 || 86400 % c.dt_s != 0) fail("dt_s must be positive and divide the day");
  if (c.days < 1) fail("days must be at least 1");
  if (c.warmup_hours < 0) fail("warmup_hours must be non-negative");
  if (c.jobs < 1) fail("jobs must be at least 1");
  if (c.household_size < 1 || c.household_size > 4) fail("household_size must be 1..4");
  for (std::size_t i = 1; i < c.appliances.avg_power_by_count.size(); ++i)
    if (!(c.appliances.avg_power_by_count[i] > c.appliances.avg_power_by_count[i - 1]))
      fail("appliance powers must increase with presence count");
  if (!(c.appliances.standby_fraction > 0.0 && c.appliances.standby_fraction < 1.0))
    fail("standby_fraction must lie in (0,1)");
  if (!(c.heat_pump.eta_carnot > 0.0 && c.heat_pump.eta_carnot < 1.0))
    fail("heat pump eta_carnot must lie in (0,1)");
  if (!(c.boiler.tank_on_below < c.boiler.tank_off_above))
    fail("boiler tank hysteresis band is empty");
  for (const auto& pt : c.boiler.efficiency_curve)
    if (!(pt.eta > 0.0 && pt.eta <= 1.0))
      fail("boiler efficiency " + format_double(pt.eta) + " outside (0,1] at plr " +
           format_double(pt.plr));
  if (!(c.battery_template.eta_char > 0.0 && c.battery_template.eta_char <= 1.0) ||
      !(c.battery_template.eta_disc > 0.0 && c.battery_template.eta_disc <= 1.0))
    fail("battery efficiencies must lie in (0,1]");
  if (!(c.battery_template.capacity > 0.0)) fail("battery capacity must be positive");
  if (!(c.battery_template.p_char_max > 0.0 && c.battery_template.p_disc_max > 0.0))
    fail("battery power limits must be positive");
  if (!(c.battery_initial_soc_fraction >= 0.0 && c.battery_initial_soc_fraction <= 1.0))
    fail("battery initial_soc_fraction must lie in [0,1]");
  if (!(c.pv.efficiency > 0.0 && c.pv.efficiency < 0.3)) fail("pv efficiency must lie in (0,0.3)");
  if (!(c.pv.area > 0.0)) fail("pv area must be positive");
  if (!(c.control.thermostat.on_below < c.control.thermostat.off_above))
    fail("thermostat on threshold must lie below the off threshold");

  std::vector<ScenarioSpec> selected;
  for (const auto& spec : build_matrix(c.seed))
    if (glob_match(c.filter, spec.code())) selected.push_back(spec);
  if (selected.empty()) fail("filter '" + c.filter + "' matches no scenario");

  try {
    const RunAssets assets = load_assets(c);
    const auto horizon_end = c.start + c.days * 86400 - c.dt_s;
    info("weather: " + c.weather_file);
    info("  " + std::to_string(assets.weather_normal.samples.size()) + " samples @ " +
         std::to_string(assets.weather_normal.resolution_s) + " s from " +
         format_iso8601(assets.weather_normal.start));
    if (horizon_end > assets.weather_normal.end())
      fail("weather series ends before the simulation horizon");
    info("profile: " + c.profile_file + " (" +
         std::to_string(assets.presence_normal.weekday_probs.size()) + " slots, household of " +
         std::to_string(c.household_size) + ")");
    const auto describe_fabric = [&](const char* name, const BuildingFabric& f) {
      const FiveR1CNetwork net = build_network(f);
      info(std::string{"fabric "} + name + ": h_win " + format_double(net.h_win, 6) +
           " W/K, h_op " + format_double(net.h_op, 6) + " W/K, h_ve " +
           format_double(net.h_ve, 6) + " W/K");
    };
    describe_fabric("worse", assets.fabric_worse);
    describe_fabric("better", assets.fabric_better);
    info("boiler q_rated: worse " + format_double(assets.boiler_worse.boiler.q_rated, 6) +
         " W, better " + format_double(assets.boiler_better.boiler.q_rated, 6) + " W");
    info("heat pump q_rated: worse " +
         format_double(assets.heat_pump_worse.heat_pump.q_rated, 6) + " W, better " +
         format_double(assets.heat_pump_better.heat_pump.q_rated, 6) + " W");
    // Probes the efficiency curve so an invalid shape surfaces here.
    boiler_efficiency(assets.boiler_worse.boiler, 0.5);
  } catch (const std::exception& e) {
    fail(e.what());
  }

  info(std::to_string(selected.size()) + " scenario(s) selected by filter '" + c.filter + "'");
  for (const auto& spec : selected) info("  " + spec.code());
  return report;
}

RunOutput run(const RunConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const ValidationReport report = validate_run(c);
  if (!report.ok) throw ConfigError(report.rendered());

  const RunAssets assets = load_assets(c);
  std::vector<ScenarioSpec> selected;
  for (const auto& spec : build_matrix(c.seed))
    if (glob_match(c.filter, spec.code())) selected.push_back(spec);

  const std::size_t n = selected.size();
  std::vector<ScenarioResult> results(n);
  std::vector<std::string> traces(n);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::vector<std::string> errors;

  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      const ScenarioSpec& spec = selected[i];
      try {
        const SimulationInput input = assemble(c, assets, spec);
        const SimulationTrace trace = simulate(input);
        results[i] = account(trace, c.tariffs, spec.code());
        if (c.write_traces) traces[i] = trace_to_csv(trace);
      } catch (const std::exception& e) {
        const std::scoped_lock lock{error_mutex};
        errors.push_back("scenario " + spec.code() + ": " + e.what());
      }
    }
  };

  const int thread_count = std::max(1, std::min<int>(c.jobs, static_cast<int>(n)));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (!errors.empty()) {
    std::string msg;
    for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
    throw Error(msg);
  }

  if (c.write_traces) {
    std::error_code ec;
    std::filesystem::create_directories(c.out_dir, ec);
    if (ec) throw Error("cannot create output directory " + c.out_dir + ": " + ec.message());
    for (std::size_t i = 0; i < n; ++i)
      csv::write_file(c.out_dir + "/trace_" + selected[i].code() + ".csv", traces[i]);
  }
  write_report(results, c.out_dir);

  RunOutput out;
  out.results = std::move(results);
  for (const auto& spec : selected) out.codes.push_back(spec.code());
  out.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace bps
