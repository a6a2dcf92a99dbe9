#pragma once

#include <vector>

#include "bps/weather.hpp"

namespace bps {

// One glazed surface. azimuth_deg is the outward normal, measured clockwise
// from north (south = 180); tilt_deg 90 is vertical, 0 horizontal.
struct WindowSpec {
  double area = 0.0;     // m2
  double u = 0.0;        // W/(m2 K)
  double g = 0.0;        // solar energy transmittance, 0..1
  double azimuth_deg = 180.0;
  double tilt_deg = 90.0;
};

struct BuildingFabric {
  double a_f = 0.0;        // conditioned floor area, m2
  double footprint = 0.0;  // m2
  double u_op = 0.0;       // opaque U-value, W/(m2 K)
  double a_op = 0.0;       // opaque area, m2
  std::vector<WindowSpec> windows;
  double f_ms = 3.0;       // mass correction factor
  double rat_sur = 4.5;    // total surface area / floor area
  double c_m_spec = 165000.0;  // areal heat capacity, J/(m2 K)
  double ach = 0.5;        // air changes per hour
  double volume = 0.0;     // m3
};

// Lumped conductances and capacitance of the zone network.
struct FiveR1CNetwork {
  double h_win = 0.0;  // W/K, glazing to exterior
  double h_op = 0.0;   // W/K, opaque envelope (series result)
  double h_tra = 0.0;  // W/K, exterior to mass node
  double h_mas = 0.0;  // W/K, mass to surface node
  double h_the = 0.0;  // W/K, surface to air node
  double h_ve = 0.0;   // W/K, ventilation
  double c_m = 0.0;    // J/K
  double a_m = 0.0;    // m2, effective mass area
  double a_tot = 0.0;  // m2, total interior surface area
};

// t_mas is the single dynamic state; t_air/t_sur are the algebraic node
// solutions reported at the end of the last step.
struct ZoneState {
  double t_mas = 293.15;
  double t_air = 293.15;
  double t_sur = 293.15;
};

struct GainSplit {
  double phi_ia = 0.0;  // to air node, W
  double phi_st = 0.0;  // to surface node, W
  double phi_m = 0.0;   // to mass node, W
};

struct NodeTemperatures {
  double t_air = 0.0;
  double t_sur = 0.0;
  double t_mas = 0.0;
};

// Derives the network from fabric data. Throws ConfigError when invariants
// fail, in particular when the opaque conductance is not below the
// mass-surface conductance (the series split would be non-positive).
FiveR1CNetwork build_network(const BuildingFabric& fabric);

// Distributes internal and solar gains over the air, surface, and mass nodes.
GainSplit split_gains(double phi_int, double phi_sol, const FiveR1CNetwork& net);

// Transmitted solar power through all windows for one weather sample.
double solar_gains(const WeatherSample& sample, const BuildingFabric& fabric);

// Advances the zone one step of length dt: the air and surface balances are
// eliminated exactly, the mass node integrates with the trapezoidal rule.
ZoneState step_zone(const FiveR1CNetwork& net, const ZoneState& state, double t_ext,
                    double t_sup, double phi_int, double phi_sol, double phi_hc, double dt);

// Exact solution of the three nodal balances with the mass derivative zero.
NodeTemperatures steady_state(const FiveR1CNetwork& net, double t_ext, double t_sup,
                              double phi_int, double phi_sol, double phi_hc);

// Reduced one-node decay rate K/c_m (1/s) after eliminating the algebraic
// nodes; exp(-dt/tau) with tau = c_m/K is the continuous free-response factor.
double mass_node_conductance(const FiveR1CNetwork& net);

}  // namespace bps
