// Release gate: exercises the shipped configuration end to end and prints one
// verdict line per criterion. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "bps/common.hpp"
#include "bps/csv.hpp"
#include "bps/runner.hpp"

using namespace bps;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// ---- criterion 1: accounting reproduces the reference month table ----------

Outcome accounting_fixture(const std::string& repo) {
  const double t0 = now_s();
  const auto rows = csv::lines(csv::read_file(repo + "/tests/data/reference_results.csv"));
  Tariffs tariffs;
  double max_co2_dev = 0.0, max_cost_dev = 0.0;
  int checked = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = csv::split(rows[i]);
    const long line = static_cast<long>(i + 1);
    const double v_gas = csv::to_double(f[1], line);
    const double e_feed = csv::to_double(f[4], line);
    const double co2_ref = csv::to_double(f[5], line);
    const double cost_ref = csv::to_double(f[6], line);
    const CostBreakdown got = account_from_totals(v_gas, e_feed, tariffs);
    max_co2_dev = std::max(max_co2_dev, std::abs(got.co2_t - co2_ref));
    max_cost_dev = std::max(max_cost_dev, std::abs(got.cost_eur - cost_ref));
    ++checked;
  }
  const double elapsed = now_s() - t0;
  Outcome out;
  out.pass = checked == 36 && max_co2_dev <= 0.002 && max_cost_dev <= 0.05 && elapsed < 1.0;
  out.detail = std::to_string(checked) + " rows, max dev " + fmt("%.4f", max_co2_dev) +
               " t / " + fmt("%.3f", max_cost_dev) + " EUR, " + fmt("%.2f", elapsed) + " s";
  return out;
}

// ---- criterion 2: appliance energy closures --------------------------------

Outcome occupancy_closure(const RunConfig& base, const fs::path& work) {
  const double t0 = now_s();
  RunConfig c = base;
  c.filter = "B1O?W1";
  c.jobs = 3;
  c.write_traces = false;
  c.out_dir = (work / "occupancy").string();
  const RunOutput out = run(c);
  double o1 = 0.0, o2 = 0.0, o3 = 0.0;
  for (std::size_t i = 0; i < out.codes.size(); ++i) {
    const double e = -out.results[i].e_load_kwh;
    if (out.codes[i] == "B1O1W1") o1 = e;
    if (out.codes[i] == "B1O2W1") o2 = e;
    if (out.codes[i] == "B1O3W1") o3 = e;
  }

  // Expected O1 energy and its spread from the profile and the calendar.
  const RunAssets assets = load_assets(c);
  const PresenceProfile& prof = assets.presence_normal;
  const std::array<double, 5> binom{1.0, 4.0, 6.0, 4.0, 1.0};
  double mean_j = 0.0, var_j2 = 0.0;
  for (long d = 0; d < c.days; ++d) {
    const bool weekend = is_weekend(c.start + d * 86400);
    const auto& probs = weekend ? prof.weekend_probs : prof.weekday_probs;
    for (int s = 0; s < 96; ++s) {
      const double p = probs[static_cast<std::size_t>(s / 4)];
      double mu = 0.0, m2 = 0.0;
      for (int k = 0; k <= 4; ++k) {
        const double pr =
            binom[static_cast<std::size_t>(k)] * std::pow(p, k) * std::pow(1.0 - p, 4 - k);
        const double power = appliance_load(k, c.appliances, 4);
        mu += pr * power;
        m2 += pr * power * power;
      }
      mean_j += mu * 900.0;
      var_j2 += (m2 - mu * mu) * 900.0 * 900.0;
    }
  }
  const double mean_kwh = mean_j / 3.6e6;
  const double sigma_kwh = std::sqrt(var_j2) / 3.6e6;
  const double lo = mean_kwh - 2.576 * sigma_kwh;
  const double hi = mean_kwh + 2.576 * sigma_kwh;
  const double elapsed = now_s() - t0;

  Outcome res;
  const bool o3_ok = std::abs(o3 - 360.96) <= 0.005 * 360.96;
  const bool o2_ok = std::abs(o2 - 54.14) <= 0.005 * 54.14;
  const bool o1_ok = o1 > o2 && o1 < o3 && o1 >= lo && o1 <= hi;
  res.pass = o3_ok && o2_ok && o1_ok && elapsed < 5.0;
  res.detail = "O3 " + fmt("%.2f", o3) + " kWh, O2 " + fmt("%.2f", o2) + " kWh, O1 " +
               fmt("%.2f", o1) + " in [" + fmt("%.2f", lo) + ", " + fmt("%.2f", hi) + "], " +
               fmt("%.2f", elapsed) + " s";
  return res;
}

// ---- criterion 3: zone model against an independent linear solve -----------

NodeTemperatures dense_solve(const FiveR1CNetwork& n, double t_ext, double t_sup,
                             const GainSplit& g, double phi_hc) {
  std::array<std::array<double, 4>, 3> m{};
  m[0] = {-(n.h_ve + n.h_the), n.h_the, 0.0, -(n.h_ve * t_sup + g.phi_ia + phi_hc)};
  m[1] = {n.h_the, -(n.h_win + n.h_mas + n.h_the), n.h_mas, -(n.h_win * t_ext + g.phi_st)};
  m[2] = {0.0, n.h_mas, -(n.h_tra + n.h_mas), -(n.h_tra * t_ext + g.phi_m)};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    std::swap(m[col], m[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::array<double, 3> x{};
  for (int row = 2; row >= 0; --row) {
    double acc = m[row][3];
    for (int k = row + 1; k < 3; ++k) acc -= m[row][k] * x[k];
    x[row] = acc / m[row][row];
  }
  return {x[0], x[1], x[2]};
}

Outcome envelope_oracle(const std::string& repo) {
  const BuildingFabric fabric = load_fabric_file(repo + "/data/fabric/worse.json");
  const FiveR1CNetwork net = build_network(fabric);

  // Long-run state under constant forcing vs the dense solve.
  const double t_ext = 266.15, phi_int = 500.0, phi_sol = 200.0, phi_hc = 6000.0;
  ZoneState z;
  for (int i = 0; i < 30000; ++i)
    z = step_zone(net, z, t_ext, t_ext, phi_int, phi_sol, phi_hc, 900.0);
  const GainSplit g = split_gains(phi_int, phi_sol, net);
  const NodeTemperatures ref = dense_solve(net, t_ext, t_ext, g, phi_hc);
  const double dev = std::max({std::abs(z.t_air - ref.t_air), std::abs(z.t_sur - ref.t_sur),
                               std::abs(z.t_mas - ref.t_mas)});

  // Free response against the analytic one-exponential decay of the reduced
  // mass node.
  const double x = mass_node_conductance(net) * 900.0 / (2.0 * net.c_m);
  const double factor = (1.0 - x) / (1.0 + x);
  ZoneState d;
  d.t_mas = 25.0;
  double rate_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double before = d.t_mas;
    d = step_zone(net, d, 0.0, 0.0, 0.0, 0.0, 0.0, 900.0);
    rate_dev = std::max(rate_dev, std::abs(d.t_mas / before - factor) / factor);
  }

  Outcome out;
  out.pass = dev <= 1e-6 && rate_dev <= 1e-9;
  out.detail = "steady-state dev " + fmt("%.2e", dev) + " K, decay-rate dev " +
               fmt("%.2e", rate_dev);
  return out;
}

// ---- full sweep shared by criteria 4, 5, 7 ---------------------------------

struct SweepData {
  RunOutput output;
  std::string results_text;
  std::vector<std::vector<double>> t_air;    // per scenario, per step
  std::vector<std::vector<double>> phi_hc;
  std::vector<std::string> codes;
  double second_elapsed = 0.0;
  bool reruns_identical = false;
};

SweepData full_sweep(const RunConfig& base, const fs::path& work) {
  SweepData data;
  RunConfig c = base;
  c.jobs = 4;
  c.out_dir = (work / "sweep").string();
  data.output = run(c);
  data.results_text = csv::read_file(c.out_dir + "/results.csv");
  for (const auto& code : data.output.codes) {
    const auto rows = csv::lines(csv::read_file(c.out_dir + "/trace_" + code + ".csv"));
    std::vector<double> air, phi;
    air.reserve(rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto f = csv::split(rows[i]);
      air.push_back(csv::to_double(f[1], static_cast<long>(i + 1)));
      phi.push_back(csv::to_double(f[6], static_cast<long>(i + 1)));
    }
    data.t_air.push_back(std::move(air));
    data.phi_hc.push_back(std::move(phi));
    data.codes.push_back(code);
  }
  RunConfig again = c;
  again.out_dir = (work / "sweep_again").string();
  const RunOutput second = run(again);
  data.second_elapsed = second.elapsed_s;
  data.reruns_identical =
      csv::read_file(again.out_dir + "/results.csv") == data.results_text;
  return data;
}

// ---- criterion 4: comfort band across the whole matrix ---------------------

Outcome comfort_band(const SweepData& sweep, long warmup_steps) {
  double worst = 1.0;
  std::string worst_code = "-";
  for (std::size_t s = 0; s < sweep.codes.size(); ++s) {
    long in_band = 0, total = 0;
    for (std::size_t k = static_cast<std::size_t>(warmup_steps); k < sweep.t_air[s].size();
         ++k) {
      ++total;
      const double celsius = sweep.t_air[s][k] - 273.15;
      if (celsius >= 19.5 && celsius <= 22.5) ++in_band;
    }
    const double frac = static_cast<double>(in_band) / static_cast<double>(total);
    if (frac < worst) {
      worst = frac;
      worst_code = sweep.codes[s];
    }
  }
  Outcome out;
  out.pass = sweep.codes.size() == 36 && worst >= 0.95;
  out.detail = std::to_string(sweep.codes.size()) + " scenarios, worst " +
               fmt("%.1f", 100.0 * worst) + "% (" + worst_code + ")";
  return out;
}

// ---- criterion 5: qualitative orderings ------------------------------------

Outcome orderings(const SweepData& sweep, const RunConfig& base) {
  std::vector<std::string> problems;
  const auto idx = [&](const std::string& code) {
    for (std::size_t i = 0; i < sweep.codes.size(); ++i)
      if (sweep.codes[i] == code) return i;
    throw Error("missing scenario " + code);
  };
  const auto heat_kwh = [&](const std::string& code) {
    double j = 0.0;
    for (double phi : sweep.phi_hc[idx(code)]) j += phi * 900.0;
    return j / 3.6e6;
  };
  const auto gas = [&](const std::string& code) {
    return sweep.output.results[idx(code)].v_gas_m3;
  };

  // (a) the cold wave raises delivered heat for every building/occupancy pair.
  for (int b = 1; b <= 6; ++b)
    for (int o = 1; o <= 3; ++o) {
      const std::string w1 = "B" + std::to_string(b) + "O" + std::to_string(o) + "W1";
      const std::string w2 = "B" + std::to_string(b) + "O" + std::to_string(o) + "W2";
      if (!(heat_kwh(w2) > heat_kwh(w1))) problems.push_back("heat " + w2 + " <= " + w1);
    }

  // (b) insulation cuts gas use to 35..65% in every matching cell.
  double ratio_lo = 1.0, ratio_hi = 0.0;
  for (int o = 1; o <= 3; ++o)
    for (int w = 1; w <= 2; ++w) {
      const std::string suffix = "O" + std::to_string(o) + "W" + std::to_string(w);
      const double r = gas("B4" + suffix) / gas("B1" + suffix);
      ratio_lo = std::min(ratio_lo, r);
      ratio_hi = std::max(ratio_hi, r);
      if (r < 0.35 || r > 0.65) problems.push_back("gas ratio " + suffix + " " + fmt("%.2f", r));
    }

  // (c) a fully occupied house needs less gas than an empty one.
  for (const char* b : {"B1", "B4"})
    for (int w = 1; w <= 2; ++w) {
      const std::string o3 = std::string{b} + "O3W" + std::to_string(w);
      const std::string o2 = std::string{b} + "O2W" + std::to_string(w);
      if (!(gas(o3) < gas(o2))) problems.push_back("gas " + o3 + " >= " + o2);
    }

  // (d) the charged buffer tank responds faster than the heat pump loop when
  // heat is called for in a cold room: compare time to half of the eventual
  // output at one-minute resolution, valve wide open.
  const RunAssets assets = load_assets(base);
  const auto rise_steps = [&](const PlantConfig& plant) {
    HydronicState hyd;
    const bool is_boiler = plant.type == PlantType::gas_boiler;
    const double mass = is_boiler ? plant.boiler.tank_volume * 1000.0 + plant.loop_mass_kg
                                  : plant.loop_mass_kg;
    if (is_boiler) hyd.t_loop = hyd.t_tank;
    const double t_air = 291.15, t_set = 295.15, dt = 60.0;
    std::vector<double> phis;
    for (int k = 0; k < 120; ++k) {
      if (is_boiler) {
        boiler_step(plant.boiler, hyd, plant.fuel, mass, dt);
        hyd.t_loop = hyd.t_tank;
      } else {
        heat_pump_step(plant.heat_pump, hyd, true, mass, dt);
      }
      const double phi =
          radiator_emission(hyd.t_loop, t_air, t_set, plant.radiator, mass, dt).phi_hc;
      phis.push_back(phi);
      if (is_boiler) {
        radiator_apply(hyd.t_tank, mass, phi, dt);
        hyd.t_loop = hyd.t_tank;
      } else {
        radiator_apply(hyd.t_loop, mass, phi, dt);
      }
    }
    double peak = 0.0;
    for (double p : phis) peak = std::max(peak, p);
    for (std::size_t k = 0; k < phis.size(); ++k)
      if (phis[k] >= 0.5 * peak) return static_cast<int>(k) + 1;
    return static_cast<int>(phis.size()) + 1;
  };
  const int boiler_rise = rise_steps(assets.boiler_worse);
  const int hp_rise = rise_steps(assets.heat_pump_worse);
  if (!(boiler_rise < hp_rise))
    problems.push_back("rise " + std::to_string(boiler_rise) + " min vs heat pump " +
                       std::to_string(hp_rise) + " min");

  Outcome out;
  out.pass = problems.empty();
  out.detail = "gas ratio " + fmt("%.2f", ratio_lo) + ".." + fmt("%.2f", ratio_hi) +
               ", tank 50% in " + std::to_string(boiler_rise) + " min vs " +
               std::to_string(hp_rise) + " min";
  if (!out.pass) {
    out.detail += "; ";
    for (const auto& p : problems) out.detail += p + "; ";
  }
  return out;
}

// ---- criterion 6: dispatch invariants under random load --------------------

Outcome dispatch_invariants() {
  std::mt19937_64 rng(20230117);
  std::uniform_real_distribution<double> power(0.0, 12000.0);
  BatteryState battery;
  battery.soc = 5.0;
  long violations = 0;
  const long steps = 1000000;
  for (long i = 0; i < steps; ++i) {
    const double p_pv = power(rng), p_load = power(rng);
    const DispatchResult r = dispatch(p_pv, p_load, battery, 900.0);
    if (battery.soc < 0.0 || battery.soc > battery.capacity) ++violations;
    if (r.p_char > 0.0 && r.p_disc > 0.0) ++violations;
    if (r.p_char > battery.p_char_max || r.p_disc > battery.p_disc_max) ++violations;
    if (r.p_char < 0.0 || r.p_disc < 0.0) ++violations;
    if (r.grid.p_feed != (p_pv - p_load) - r.p_char + r.p_disc) ++violations;
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = std::to_string(steps) + " steps, " + std::to_string(violations) + " violations";
  return out;
}

// ---- criterion 7: sweep wall time and reproducibility ----------------------

Outcome performance(const SweepData& sweep) {
  const double elapsed = std::min(sweep.output.elapsed_s, sweep.second_elapsed);
  Outcome out;
  out.pass = sweep.output.results.size() == 36 && elapsed < 10.0 && sweep.reruns_identical;
  out.detail = "36 scenarios in " + fmt("%.2f", elapsed) + " s with 4 jobs, reruns " +
               (sweep.reruns_identical ? "identical" : "DIFFER");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string repo = argc > 1 ? argv[1] : BPS_REPO_ROOT;
  const fs::path work = fs::temp_directory_path() / "bps_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  std::array<Outcome, 7> outcome;
  const std::array<const char*, 7> title = {
      "accounting reproduces the reference table",
      "appliance energy closures",
      "zone model matches the independent oracle",
      "air temperature holds 19.5..22.5 C for 95% of steps",
      "cold-wave, insulation, occupancy and response orderings",
      "dispatch invariants over one million random steps",
      "full sweep under 10 s with bit-identical reruns",
  };

  try {
    const RunConfig base = load_run_config(repo + "/config/default.json");
    const long warmup_steps = base.warmup_hours * 3600 / base.dt_s;

    outcome[0] = accounting_fixture(repo);
    outcome[1] = occupancy_closure(base, work);
    outcome[2] = envelope_oracle(repo);
    outcome[5] = dispatch_invariants();
    const SweepData sweep = full_sweep(base, work);
    outcome[3] = comfort_band(sweep, warmup_steps);
    outcome[4] = orderings(sweep, base);
    outcome[6] = performance(sweep);
  } catch (const std::exception& e) {
    std::printf("aborted: %s\n", e.what());
    for (std::size_t i = 0; i < outcome.size(); ++i)
      if (outcome[i].detail.empty()) outcome[i].detail = "not reached";
  }

  int failed = 0;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    std::printf("[%s] criterion %zu: %s (%s)\n", outcome[i].pass ? "PASS" : "FAIL", i + 1,
                title[i], outcome[i].detail.c_str());
    if (!outcome[i].pass) ++failed;
  }
  std::printf("%d of 7 criteria passed\n", 7 - failed);
  fs::remove_all(work);
  return failed == 0 ? 0 : 1;
}
